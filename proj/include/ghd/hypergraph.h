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

#ifndef GHD_HYPERGRAPH_H_
#define GHD_HYPERGRAPH_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ghd {

// Vertices and edges are addressed by their position in the canonical
// (byte-lexicographic) name order, so id order and name order coincide.
using VertexId = int;
using EdgeId = int;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

struct Edge {
  std::string name;
  VertexSet vertices;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Input record for build(): an edge name and its (possibly repeated)
// vertex names.
struct EdgeSpec {
  std::string name;
  std::vector<std::string> vertices;
};

// Immutable hypergraph with canonical vertex and edge order. The vertex set
// is exactly the union of the edges, so there are no isolated vertices.
class Hypergraph {
 public:
  // The empty hypergraph.
  Hypergraph() = default;

  // Throws Error(kEmptyEdge) or Error(kDuplicateEdgeName).
  static Hypergraph build(std::vector<EdgeSpec> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  const std::string& vertex_name(VertexId v) const { return vertices_[v]; }
  const std::string& edge_name(EdgeId e) const { return edges_[e].name; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;
  // Throws Error(kUnknownVertex).
  VertexId vertex_id(std::string_view name) const;

  // Edges containing v, ascending.
  const std::vector<EdgeId>& incident_edges(VertexId v) const {
    return incidence_[v];
  }
  // Names of the edges containing the named vertex. Throws
  // Error(kUnknownVertex).
  std::vector<std::string> incident_edges(std::string_view vertex) const;

  // Round trip back to build() input.
  std::vector<EdgeSpec> to_specs() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

inline Hypergraph build(std::vector<EdgeSpec> edges) {
  return Hypergraph::build(std::move(edges));
}

// Gaifman graph: u ~ v iff some edge contains both. Irreflexive, symmetric.
class PrimalGraph {
 public:
  explicit PrimalGraph(std::vector<VertexSet> adjacency)
      : adjacency_(std::move(adjacency)) {}

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const;
  const VertexSet& neighbors(VertexId v) const { return adjacency_[v]; }
  bool adjacent(VertexId u, VertexId v) const;

 private:
  std::vector<VertexSet> adjacency_;
};

PrimalGraph primal_graph(const Hypergraph& h);

// Partition of the vertices by primal connectivity. Each component is
// sorted; components are ordered by their smallest member.
std::vector<VertexSet> connected_components(const Hypergraph& h);

// Outcome of GYO reduction.
struct GyoResult {
  struct ResidualEdge {
    EdgeId edge;
    VertexSet vertices;  // what is left of the edge after ear removal

    friend bool operator==(const ResidualEdge&,
                           const ResidualEdge&) = default;
  };
  struct Absorption {
    EdgeId child;
    EdgeId parent;

    friend bool operator==(const Absorption&, const Absorption&) = default;
  };

  // Edges that survive with a non-empty vertex set, ascending by id.
  std::vector<ResidualEdge> residual;
  // Absorptions in the order they were applied.
  std::vector<Absorption> absorbed;
  // Edges reduced to nothing and never absorbed. For an alpha-acyclic,
  // non-empty input this is exactly one edge: the join tree root.
  std::vector<EdgeId> roots;
  // Number of rule applications (ear deletions plus absorptions).
  std::size_t steps = 0;

  // Absorbing parent of e, if e was absorbed.
  std::optional<EdgeId> parent(EdgeId e) const;
};

// Repeatedly deletes the smallest ear vertex (a vertex in exactly one
// surviving edge); when none exists, absorbs the smallest edge that is a
// subset of another surviving edge into the smallest such superset. Equal
// edges are absorbed larger-name into smaller-name.
GyoResult gyo_reduce(const Hypergraph& h);

bool is_alpha_acyclic(const Hypergraph& h);

}  // namespace ghd

#endif  // GHD_HYPERGRAPH_H_
