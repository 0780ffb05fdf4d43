// Copyright 2026 The ghd Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ghd/error.h"

#include <string>

namespace ghd {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyEdge:
      return "EmptyEdge";
    case ErrorCode::kDuplicateEdgeName:
      return "DuplicateEdgeName";
    case ErrorCode::kUnknownVertex:
      return "UnknownVertex";
    case ErrorCode::kSyntaxError:
      return "SyntaxError";
    case ErrorCode::kDanglingTreeEdge:
      return "DanglingTreeEdge";
    case ErrorCode::kCyclicTree:
      return "CyclicTree";
    case ErrorCode::kInvalidNodeId:
      return "InvalidNodeId";
    case ErrorCode::kInvalidDecomposition:
      return "InvalidDecomposition";
    case ErrorCode::kUncoverable:
      return "Uncoverable";
    case ErrorCode::kBoundExceeded:
      return "BoundExceeded";
    case ErrorCode::kTooLarge:
      return "TooLarge";
  }
  return "Unknown";
}

ParseError::ParseError(ErrorCode code, ParseDiagnostic diagnostic)
    : Error(code, std::to_string(diagnostic.line) + ":" +
                      std::to_string(diagnostic.column) + ": " +
                      diagnostic.message),
      diagnostic_(std::move(diagnostic)) {}

}  // namespace ghd
