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

#ifndef GHD_ERROR_H_
#define GHD_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ghd {

enum class ErrorCode {
  kEmptyEdge,
  kDuplicateEdgeName,
  kUnknownVertex,
  kSyntaxError,
  kDanglingTreeEdge,
  kCyclicTree,
  kInvalidNodeId,
  kInvalidDecomposition,
  kUncoverable,
  kBoundExceeded,
  kTooLarge,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this exception type. The code
// identifies the failure class; what() carries a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// 1-based position inside a parsed text. column counts bytes.
struct ParseDiagnostic {
  int line = 1;
  int column = 1;
  std::string message;
};

class ParseError : public Error {
 public:
  ParseError(ErrorCode code, ParseDiagnostic diagnostic);

  const ParseDiagnostic& diagnostic() const { return diagnostic_; }

 private:
  ParseDiagnostic diagnostic_;
};

}  // namespace ghd

#endif  // GHD_ERROR_H_
