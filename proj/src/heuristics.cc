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

#include "ghd/heuristics.h"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include <boost/dynamic_bitset.hpp>

#include "ghd/cover.h"
#include "ghd/error.h"
#include "ghd/random.h"

namespace ghd {
namespace {

using Bits = boost::dynamic_bitset<>;

// Primal graph under vertex elimination with fill-in.
class EliminationGraph {
 public:
  explicit EliminationGraph(const Hypergraph& h)
      : adjacency_(h.num_vertices(), Bits(h.num_vertices())),
        alive_(h.num_vertices()) {
    alive_.set();
    const PrimalGraph g = primal_graph(h);
    for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
      for (VertexId w : g.neighbors(v)) adjacency_[v].set(w);
    }
  }

  bool alive(VertexId v) const { return alive_.test(v); }
  const Bits& neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].count(); }

  std::size_t fill(VertexId v) const {
    const Bits& n = adjacency_[v];
    std::size_t missing = 0;
    for (auto u = n.find_first(); u != Bits::npos; u = n.find_next(u)) {
      Bits absent = n - adjacency_[u];
      absent.reset(u);
      missing += absent.count();
    }
    return missing / 2;
  }

  // Removes v after turning its neighbourhood into a clique.
  void eliminate(VertexId v) {
    const Bits n = adjacency_[v];
    for (auto u = n.find_first(); u != Bits::npos; u = n.find_next(u)) {
      adjacency_[u] |= n;
      adjacency_[u].reset(u);
      adjacency_[u].reset(v);
    }
    adjacency_[v].reset();
    alive_.reset(v);
  }

 private:
  std::vector<Bits> adjacency_;
  Bits alive_;
};

// Smallest alive vertex minimising score(v).
template <typename Score>
VertexId argmin_alive(const EliminationGraph& g, std::size_t n, Score score) {
  VertexId best = -1;
  std::size_t best_score = std::numeric_limits<std::size_t>::max();
  for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
    if (!g.alive(v)) continue;
    const std::size_t s = score(v);
    if (s < best_score) {
      best_score = s;
      best = v;
    }
  }
  return best;
}

bool is_subset(const std::vector<std::string>& small,
               const std::vector<std::string>& large) {
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

}  // namespace

std::string_view heuristic_name(Heuristic h) {
  switch (h) {
    case Heuristic::kMinDegree:
      return "min-degree";
    case Heuristic::kMinFill:
      return "min-fill";
    case Heuristic::kMcs:
      return "mcs";
    case Heuristic::kRandom:
      return "random";
  }
  return "unknown";
}

std::optional<Heuristic> parse_heuristic(std::string_view name) {
  for (Heuristic h : {Heuristic::kMinDegree, Heuristic::kMinFill,
                      Heuristic::kMcs, Heuristic::kRandom}) {
    if (heuristic_name(h) == name) return h;
  }
  return std::nullopt;
}

std::string_view cover_mode_name(CoverMode mode) {
  switch (mode) {
    case CoverMode::kGreedy:
      return "greedy";
    case CoverMode::kExact:
      return "exact";
    case CoverMode::kAuto:
      return "auto";
  }
  return "unknown";
}

std::optional<CoverMode> parse_cover_mode(std::string_view name) {
  for (CoverMode m : {CoverMode::kGreedy, CoverMode::kExact, CoverMode::kAuto}) {
    if (cover_mode_name(m) == name) return m;
  }
  return std::nullopt;
}

EliminationOrder order_min_degree(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  EliminationGraph g(h);
  EliminationOrder result{{}, Heuristic::kMinDegree, 0};
  for (std::size_t step = 0; step < n; ++step) {
    const VertexId v =
        argmin_alive(g, n, [&](VertexId u) { return g.degree(u); });
    result.order.push_back(v);
    g.eliminate(v);
  }
  return result;
}

EliminationOrder order_min_fill(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  EliminationGraph g(h);
  std::vector<std::size_t> fill(n);
  for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) fill[v] = g.fill(v);

  EliminationOrder result{{}, Heuristic::kMinFill, 0};
  for (std::size_t step = 0; step < n; ++step) {
    const VertexId v = argmin_alive(g, n, [&](VertexId u) { return fill[u]; });
    result.order.push_back(v);
    const Bits touched = g.neighbors(v);
    g.eliminate(v);
    // Only the neighbourhood and its neighbours can change fill.
    Bits dirty = touched;
    for (auto u = touched.find_first(); u != Bits::npos;
         u = touched.find_next(u)) {
      dirty |= g.neighbors(static_cast<VertexId>(u));
    }
    for (auto u = dirty.find_first(); u != Bits::npos; u = dirty.find_next(u)) {
      if (g.alive(static_cast<VertexId>(u))) {
        fill[u] = g.fill(static_cast<VertexId>(u));
      }
    }
  }
  return result;
}

EliminationOrder order_mcs(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  const PrimalGraph g = primal_graph(h);
  std::vector<std::size_t> labelled_neighbors(n, 0);
  std::vector<bool> labelled(n, false);
  std::vector<VertexId> labelling;
  labelling.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    VertexId best = -1;
    for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
      if (labelled[v]) continue;
      if (best < 0 || labelled_neighbors[v] > labelled_neighbors[best]) {
        best = v;
      }
    }
    labelled[best] = true;
    labelling.push_back(best);
    for (VertexId w : g.neighbors(best)) ++labelled_neighbors[w];
  }
  std::reverse(labelling.begin(), labelling.end());
  return {std::move(labelling), Heuristic::kMcs, 0};
}

EliminationOrder order_random(const Hypergraph& h, std::uint64_t seed) {
  std::vector<VertexId> order(h.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  Xoshiro256StarStar rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(order[i - 1], order[j]);
  }
  return {std::move(order), Heuristic::kRandom, seed};
}

EliminationOrder make_order(const Hypergraph& h, Heuristic heuristic,
                            std::uint64_t seed) {
  switch (heuristic) {
    case Heuristic::kMinDegree:
      return order_min_degree(h);
    case Heuristic::kMinFill:
      return order_min_fill(h);
    case Heuristic::kMcs:
      return order_mcs(h);
    case Heuristic::kRandom:
      return order_random(h, seed);
  }
  return order_min_fill(h);
}

Decomposition bucket_elimination(const Hypergraph& h,
                                 std::span<const VertexId> order) {
  const std::size_t n = h.num_vertices();
  std::vector<int> position(n, -1);
  if (order.size() != n) {
    throw Error(ErrorCode::kUnknownVertex,
                "elimination order has " + std::to_string(order.size()) +
                    " entries for " + std::to_string(n) + " vertices");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId v = order[i];
    if (v < 0 || v >= static_cast<VertexId>(n) || position[v] >= 0) {
      throw Error(ErrorCode::kUnknownVertex,
                  "elimination order is not a permutation of the vertices");
    }
    position[v] = static_cast<int>(i);
  }

  EliminationGraph g(h);
  std::map<NodeId, DecompositionNode> nodes;
  std::vector<Decomposition::TreeEdge> tree;
  std::vector<bool> is_root(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId v = order[i];
    const Bits& later = g.neighbors(v);
    DecompositionNode node;
    node.bag.push_back(h.vertex_name(v));
    int parent_position = std::numeric_limits<int>::max();
    for (auto u = later.find_first(); u != Bits::npos; u = later.find_next(u)) {
      node.bag.push_back(h.vertex_name(static_cast<VertexId>(u)));
      parent_position = std::min(parent_position, position[u]);
    }
    const auto id = static_cast<NodeId>(i + 1);
    if (later.none()) {
      is_root[v] = true;
    } else {
      tree.emplace_back(id, parent_position + 1);
    }
    nodes.emplace(id, std::move(node));
    g.eliminate(v);
  }

  NodeId previous_root = 0;
  for (const VertexSet& component : connected_components(h)) {
    for (VertexId v : component) {
      if (!is_root[v]) continue;
      const NodeId root = position[v] + 1;
      if (previous_root != 0) tree.emplace_back(previous_root, root);
      previous_root = root;
    }
  }
  return Decomposition(std::move(nodes), std::move(tree));
}

Decomposition prune_subsumed_bags(const Decomposition& d) {
  std::map<NodeId, DecompositionNode> nodes = d.nodes();
  std::map<NodeId, std::set<NodeId>> adjacency;
  for (const auto& [id, node] : nodes) adjacency[id];
  for (const auto& [u, v] : d.tree_edges()) {
    adjacency[u].insert(v);
    adjacency[v].insert(u);
  }

  // Every mergeable node stays in the worklist, so popping the smallest
  // candidate always yields the smallest mergeable node.
  std::set<NodeId> candidates;
  for (const auto& [id, node] : nodes) candidates.insert(id);
  while (!candidates.empty()) {
    const NodeId id = *candidates.begin();
    candidates.erase(candidates.begin());
    const auto& bag = nodes.at(id).bag;
    std::optional<NodeId> target;
    for (NodeId nb : adjacency.at(id)) {
      if (is_subset(bag, nodes.at(nb).bag)) {
        target = nb;
        break;
      }
    }
    if (!target) continue;
    for (NodeId x : adjacency.at(id)) {
      adjacency.at(x).erase(id);
      if (x == *target) continue;
      adjacency.at(x).insert(*target);
      adjacency.at(*target).insert(x);
      candidates.insert(x);
    }
    candidates.insert(*target);
    adjacency.erase(id);
    nodes.erase(id);
  }

  std::map<NodeId, NodeId> renumber;
  std::map<NodeId, DecompositionNode> out_nodes;
  for (auto& [id, node] : nodes) {
    const auto fresh = static_cast<NodeId>(renumber.size() + 1);
    renumber[id] = fresh;
    out_nodes.emplace(fresh, std::move(node));
  }
  std::vector<Decomposition::TreeEdge> out_tree;
  for (const auto& [u, neighbors] : adjacency) {
    for (NodeId v : neighbors) {
      if (u < v) out_tree.emplace_back(renumber.at(u), renumber.at(v));
    }
  }
  return Decomposition(std::move(out_nodes), std::move(out_tree));
}

Decomposition assign_covers(const Hypergraph& h, const Decomposition& d,
                            CoverMode mode) {
  if (mode == CoverMode::kAuto) {
    std::size_t largest_bag = 0;
    for (const auto& [id, node] : d.nodes()) {
      largest_bag = std::max(largest_bag, node.bag.size());
    }
    mode = (largest_bag > 12 || h.num_edges() > 64) ? CoverMode::kGreedy
                                                     : CoverMode::kExact;
  }
  std::map<NodeId, DecompositionNode> nodes;
  for (const auto& [id, node] : d.nodes()) {
    VertexSet target;
    for (const std::string& name : node.bag) target.push_back(h.vertex_id(name));
    std::sort(target.begin(), target.end());
    const CoverResult cover = mode == CoverMode::kGreedy
                                  ? greedy_cover(h, target)
                                  : exact_cover(h, target);
    nodes.emplace(id, DecompositionNode{node.bag, cover.chosen_names(h)});
  }
  return Decomposition(std::move(nodes), d.tree_edges());
}

Decomposition join_tree(const Hypergraph& h) {
  const GyoResult gyo = gyo_reduce(h);
  if (!gyo.residual.empty()) {
    throw Error(ErrorCode::kInvalidDecomposition,
                "join tree requested for a hypergraph that is not "
                "alpha-acyclic");
  }
  std::map<NodeId, DecompositionNode> nodes;
  for (EdgeId e = 0; e < static_cast<EdgeId>(h.num_edges()); ++e) {
    DecompositionNode node;
    for (VertexId v : h.edges()[e].vertices) node.bag.push_back(h.vertex_name(v));
    node.cover.push_back(h.edge_name(e));
    nodes.emplace(e + 1, std::move(node));
  }
  std::vector<Decomposition::TreeEdge> tree;
  for (const GyoResult::Absorption& a : gyo.absorbed) {
    tree.emplace_back(a.child + 1, a.parent + 1);
  }
  return Decomposition(std::move(nodes), std::move(tree));
}

Hypergraph remove_subsumed_edges(const Hypergraph& h) {
  const auto& edges = h.edges();
  auto absorbed = [&](EdgeId e) {
    const VertexSet& s = edges[e].vertices;
    for (EdgeId f : h.incident_edges(s.front())) {
      if (f == e) continue;
      const VertexSet& t = edges[f].vertices;
      if (s.size() > t.size() || (s.size() == t.size() && f > e)) continue;
      if (std::includes(t.begin(), t.end(), s.begin(), s.end())) return true;
    }
    return false;
  };
  std::vector<EdgeSpec> kept;
  const auto specs = h.to_specs();
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
    if (!absorbed(e)) kept.push_back(specs[e]);
  }
  return Hypergraph::build(std::move(kept));
}

Decomposition decompose(const Hypergraph& input,
                        const DecomposeOptions& options) {
  const Hypergraph h =
      options.preprocess ? remove_subsumed_edges(input) : input;
  if (h.empty()) return Decomposition();
  if (is_alpha_acyclic(h)) return join_tree(h);
  const EliminationOrder order = make_order(h, options.heuristic, options.seed);
  const Decomposition bags =
      prune_subsumed_bags(bucket_elimination(h, order.order));
  return assign_covers(h, bags, options.cover);
}

}  // namespace ghd
