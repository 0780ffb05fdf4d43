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

#ifndef GHD_DECOMPOSITION_H_
#define GHD_DECOMPOSITION_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ghd/hypergraph.h"

namespace ghd {

using NodeId = int;

// A decomposition node: the bag (chi) and the cover (lambda). Both are held
// by name so that a parsed decomposition may reference names the hypergraph
// does not know; those surface in validation, not at construction.
struct DecompositionNode {
  std::vector<std::string> bag;
  std::vector<std::string> cover;

  friend bool operator==(const DecompositionNode&,
                         const DecompositionNode&) = default;
};

// Rooted tree (or forest) of nodes. Node ids are positive; the root is the
// smallest id. Tree edges are stored as (smaller id, larger id), sorted.
class Decomposition {
 public:
  using TreeEdge = std::pair<NodeId, NodeId>;

  Decomposition() = default;

  // Sorts and deduplicates bags and covers. Throws Error(kInvalidNodeId),
  // Error(kDanglingTreeEdge) or Error(kCyclicTree). Self loops and repeated
  // tree edges count as cycles.
  Decomposition(std::map<NodeId, DecompositionNode> nodes,
                std::vector<TreeEdge> tree_edges);

  const std::map<NodeId, DecompositionNode>& nodes() const { return nodes_; }
  const std::vector<TreeEdge>& tree_edges() const { return tree_edges_; }
  std::size_t num_nodes() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  std::optional<NodeId> root() const;

  const DecompositionNode& node(NodeId id) const { return nodes_.at(id); }

  // Neighbour lists keyed by node id, ascending.
  std::map<NodeId, std::vector<NodeId>> adjacency() const;

  // (node, parent) pairs in preorder: each component is walked from its
  // smallest id, children in ascending id order, components in ascending
  // root order. Roots have parent 0.
  std::vector<std::pair<NodeId, NodeId>> preorder() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  std::map<NodeId, DecompositionNode> nodes_;
  std::vector<TreeEdge> tree_edges_;
};

struct Verdict {
  bool passed = true;
  // Smallest violator; empty when passed.
  std::string witness;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct ValidationReport {
  // Every edge lies inside some bag.
  Verdict edge_coverage;
  // For each vertex, the nodes whose bag holds it are connected.
  Verdict connectedness;
  // Every bag lies inside the union of its cover.
  Verdict bag_cover;
  // Every named vertex/edge exists, and every vertex appears in some bag.
  // Witness is "unknown-vertex <v>", "unknown-edge <e>" or
  // "missing-vertex <v>".
  Verdict references;

  bool valid() const {
    return edge_coverage.passed && connectedness.passed && bag_cover.passed &&
           references.passed;
  }
};

// Total: never throws, every check is evaluated independently.
ValidationReport validate(const Hypergraph& h, const Decomposition& d);

// Maximum cover size over nodes; 0 for the empty decomposition.
std::size_t width(const Decomposition& d);

// Cover edges that share no vertex with their node's bag. Legal but
// wasteful; one message per offending (node, edge).
std::vector<std::string> lint(const Hypergraph& h, const Decomposition& d);

struct HypergraphStats {
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  std::size_t min_edge_size = 0;
  std::size_t max_edge_size = 0;
  double mean_edge_size = 0.0;
  std::size_t primal_edges = 0;
  std::size_t components = 0;
  bool alpha_acyclic = true;
};

HypergraphStats compute_stats(const Hypergraph& h);

// key=value lines, one per statistic, LF terminated.
std::string stats(const Hypergraph& h);

}  // namespace ghd

#endif  // GHD_DECOMPOSITION_H_
