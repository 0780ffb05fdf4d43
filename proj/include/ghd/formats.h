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

#ifndef GHD_FORMATS_H_
#define GHD_FORMATS_H_

#include <string>
#include <string_view>

#include "ghd/decomposition.h"
#include "ghd/hypergraph.h"

namespace ghd {

// Hypergraph text (.hg):
//
//   file   = clause*
//   clause = NAME "(" NAME ("," NAME)* ")" ( "," | "." )
//   NAME   = [A-Za-z0-9_:]+
//
// Whitespace between tokens is ignored and "%" comments run to end of line.
// Every clause but the last ends with ",", the last with ".".
//
// Throws ParseError(kSyntaxError) or ParseError(kDuplicateEdgeName).
Hypergraph parse_hg(std::string_view text);

// One clause per line in canonical order, no trailing newline. The empty
// hypergraph serializes to "".
std::string serialize_hg(const Hypergraph& h);

// Decomposition text (.ghd), one statement per line:
//
//   node <id> bag{v1,...} cover{e1,...}
//   edge <id> <id>
//
// Throws ParseError with kSyntaxError, kDanglingTreeEdge or kCyclicTree.
// Names unknown to any hypergraph are accepted here.
Decomposition parse_ghd(std::string_view text);

// Nodes in preorder from the root, children by ascending id, followed by
// one "edge <parent> <child>" line per non-root node in the same order.
// Every line is LF terminated.
std::string serialize_ghd(const Decomposition& d);

// Graphviz export. The hypergraph cluster draws every hyperedge as a clique
// of one colour; the decomposition cluster draws one box per node. When both
// are given the decomposition must validate against the hypergraph, or
// Error(kInvalidDecomposition) is thrown.
std::string to_dot(const Hypergraph& h);
std::string to_dot(const Decomposition& d);
std::string to_dot(const Hypergraph& h, const Decomposition& d);

}  // namespace ghd

#endif  // GHD_FORMATS_H_
