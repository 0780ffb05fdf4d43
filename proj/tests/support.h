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

// Shared fixtures, random generators and brute-force oracles for the test
// binaries. The oracles here deliberately avoid the library's search code.

#ifndef GHD_TESTS_SUPPORT_H_
#define GHD_TESTS_SUPPORT_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ghd/decomposition.h"
#include "ghd/heuristics.h"
#include "ghd/hypergraph.h"
#include "ghd/random.h"

namespace ghd::testing {

inline Hypergraph make_hg(
    std::initializer_list<std::pair<std::string, std::vector<std::string>>>
        edges) {
  std::vector<EdgeSpec> specs;
  for (const auto& [name, vertices] : edges) specs.push_back({name, vertices});
  return Hypergraph::build(std::move(specs));
}

inline Hypergraph triangle() {
  return make_hg({{"e1", {"a", "b"}}, {"e2", {"b", "c"}}, {"e3", {"a", "c"}}});
}
inline Hypergraph path() { return make_hg({{"e1", {"a", "b"}}, {"e2", {"b", "c"}}}); }
inline Hypergraph single_edge() { return make_hg({{"e1", {"a", "b"}}}); }

inline std::string fixture_path(const std::string& name) {
  return std::string(GHD_FIXTURE_DIR) + "/" + name;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string two_digits(std::size_t i) {
  return (i < 10 ? "0" : "") + std::to_string(i);
}

// Random hypergraph over vertices v00.. and edges e00..; vertex count is
// whatever the edges touch, at most max_vertices.
inline Hypergraph random_hypergraph(Xoshiro256StarStar& rng,
                                    std::size_t max_vertices,
                                    std::size_t max_edges,
                                    std::size_t min_edge_size = 1,
                                    std::size_t max_edge_size = 5) {
  const std::size_t n = 1 + rng.below(max_vertices);
  const std::size_t m = 1 + rng.below(max_edges);
  std::vector<EdgeSpec> specs;
  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t hi = std::min(max_edge_size, n);
    const std::size_t lo = std::min(min_edge_size, hi);
    const std::size_t size = lo + rng.below(hi - lo + 1);
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    EdgeSpec spec{"e" + two_digits(e), {}};
    for (std::size_t k = 0; k < size; ++k) {
      const std::size_t j = k + rng.below(n - k);
      std::swap(pool[k], pool[j]);
      spec.vertices.push_back("v" + two_digits(pool[k]));
    }
    specs.push_back(std::move(spec));
  }
  return Hypergraph::build(std::move(specs));
}

// Random forest of up to max_nodes nodes with scattered positive ids and
// arbitrary (not necessarily valid) bags and covers.
inline Decomposition random_decomposition(Xoshiro256StarStar& rng,
                                          std::size_t max_nodes) {
  const std::size_t n = rng.below(max_nodes + 1);
  std::vector<NodeId> ids;
  while (ids.size() < n) {
    const auto id = static_cast<NodeId>(1 + rng.below(1000));
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  }
  std::map<NodeId, DecompositionNode> nodes;
  for (NodeId id : ids) {
    DecompositionNode node;
    for (std::size_t k = rng.below(5); k > 0; --k) {
      node.bag.push_back("v" + two_digits(rng.below(20)));
    }
    for (std::size_t k = rng.below(4); k > 0; --k) {
      node.cover.push_back("e" + two_digits(rng.below(20)));
    }
    nodes.emplace(id, std::move(node));
  }
  std::vector<Decomposition::TreeEdge> tree;
  for (std::size_t i = 1; i < n; ++i) {
    // Occasionally leave a node unattached to get a forest.
    if (rng.below(8) == 0) continue;
    tree.emplace_back(ids[i], ids[rng.below(i)]);
  }
  return Decomposition(std::move(nodes), std::move(tree));
}

// Minimum cover size by trying edge subsets in ascending cardinality.
// Returns num_edges + 1 when the target cannot be covered.
inline std::size_t brute_force_cover(const Hypergraph& h,
                                     const VertexSet& target) {
  const std::size_t m = h.num_edges();
  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
      std::vector<bool> covered(h.num_vertices(), false);
      for (std::size_t e = 0; e < m; ++e) {
        if (!pick[e]) continue;
        for (VertexId v : h.edges()[e].vertices) covered[v] = true;
      }
      if (std::all_of(target.begin(), target.end(),
                      [&](VertexId v) { return covered[v]; })) {
        return k;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return m + 1;
}

inline VertexSet bag_ids(const Hypergraph& h, const DecompositionNode& node) {
  VertexSet ids;
  for (const std::string& name : node.bag) ids.push_back(h.vertex_id(name));
  std::sort(ids.begin(), ids.end());
  return ids;
}

// Width of the bucket-elimination decomposition for one order, with every
// bag covered by brute force.
inline std::size_t ordering_width(const Hypergraph& h,
                                  const std::vector<VertexId>& order) {
  const Decomposition d = bucket_elimination(h, order);
  std::size_t w = 0;
  for (const auto& [id, node] : d.nodes()) {
    w = std::max(w, brute_force_cover(h, bag_ids(h, node)));
  }
  return w;
}

// Generalized hypertree width by evaluating every one of the |V|! orders in
// full, with no pruning and no memoisation.
inline std::size_t naive_ghw(const Hypergraph& h) {
  if (h.empty()) return 0;
  std::vector<VertexId> order(h.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::size_t best = h.num_edges() + 1;
  do {
    best = std::min(best, ordering_width(h, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

// Same hypergraph with every vertex and edge renamed through a random
// permutation of fresh names. vertex_map, when given, receives the new name
// of each old vertex id.
inline Hypergraph renamed(const Hypergraph& h, Xoshiro256StarStar& rng,
                          std::vector<std::string>* vertex_map = nullptr) {
  auto shuffled_names = [&](std::size_t n, const std::string& prefix) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + two_digits(i));
    for (std::size_t i = n; i > 1; --i) {
      std::swap(names[i - 1], names[rng.below(i)]);
    }
    return names;
  };
  const auto vnames = shuffled_names(h.num_vertices(), "w");
  const auto enames = shuffled_names(h.num_edges(), "f");
  if (vertex_map) *vertex_map = vnames;
  std::vector<EdgeSpec> specs;
  for (EdgeId e = 0; e < static_cast<EdgeId>(h.num_edges()); ++e) {
    EdgeSpec spec{enames[e], {}};
    for (VertexId v : h.edges()[e].vertices) spec.vertices.push_back(vnames[v]);
    specs.push_back(std::move(spec));
  }
  return Hypergraph::build(std::move(specs));
}

// Every hypergraph whose edges are between 1 and max_edges distinct
// non-empty subsets of the first num_vertices letters, plus the empty one.
inline std::vector<Hypergraph> all_small_hypergraphs(std::size_t num_vertices,
                                                     std::size_t max_edges) {
  const std::size_t subsets = (std::size_t{1} << num_vertices) - 1;
  std::vector<Hypergraph> out{Hypergraph()};
  std::vector<std::size_t> chosen;
  auto emit = [&]() {
    std::vector<EdgeSpec> specs;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      EdgeSpec spec{"e" + std::to_string(i + 1), {}};
      for (std::size_t v = 0; v < num_vertices; ++v) {
        if (chosen[i] >> v & 1) spec.vertices.push_back(std::string(1, 'a' + v));
      }
      specs.push_back(std::move(spec));
    }
    out.push_back(Hypergraph::build(std::move(specs)));
  };
  // Strictly increasing subset masks enumerate each edge set once.
  auto recurse = [&](auto&& self, std::size_t next) -> void {
    if (!chosen.empty()) emit();
    if (chosen.size() == max_edges) return;
    for (std::size_t mask = next; mask <= subsets; ++mask) {
      chosen.push_back(mask);
      self(self, mask + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 1);
  return out;
}

}  // namespace ghd::testing

#endif  // GHD_TESTS_SUPPORT_H_
