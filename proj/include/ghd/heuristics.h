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

#ifndef GHD_HEURISTICS_H_
#define GHD_HEURISTICS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ghd/decomposition.h"
#include "ghd/hypergraph.h"

namespace ghd {

enum class Heuristic { kMinDegree, kMinFill, kMcs, kRandom };

std::string_view heuristic_name(Heuristic h);
std::optional<Heuristic> parse_heuristic(std::string_view name);

struct EliminationOrder {
  std::vector<VertexId> order;  // a permutation of the vertex ids
  Heuristic heuristic = Heuristic::kMinFill;
  std::uint64_t seed = 0;  // meaningful for kRandom only

  friend bool operator==(const EliminationOrder&,
                         const EliminationOrder&) = default;
};

// All ordering heuristics work on the primal graph and break ties by the
// smallest vertex name.

// Eliminate the vertex of minimum current degree, making its neighbours a
// clique.
EliminationOrder order_min_degree(const Hypergraph& h);
// Eliminate the vertex whose elimination adds the fewest fill edges.
EliminationOrder order_min_fill(const Hypergraph& h);
// Maximum cardinality search: the vertex with the most already-labelled
// neighbours is labelled next; the order is the reverse of the labelling.
EliminationOrder order_mcs(const Hypergraph& h);
// Fisher-Yates shuffle of the canonical vertex order, driven by
// Xoshiro256StarStar(seed).
EliminationOrder order_random(const Hypergraph& h, std::uint64_t seed);

EliminationOrder make_order(const Hypergraph& h, Heuristic heuristic,
                            std::uint64_t seed = 0);

// Tree decomposition from an elimination order. The node for the i-th
// eliminated vertex has id i+1 and bag {v} plus v's neighbours at
// elimination time; it hangs off the node of the earliest eliminated of
// those neighbours. Component roots are chained in component order. Covers
// are left empty. Throws Error(kUnknownVertex) if order is not a
// permutation of the vertices.
Decomposition bucket_elimination(const Hypergraph& h,
                                 std::span<const VertexId> order);

// Merges every bag that is a subset of an adjacent bag into that neighbour,
// smallest node id first (smallest neighbour id on ties), then renumbers the
// survivors 1..n in their original id order.
Decomposition prune_subsumed_bags(const Decomposition& d);

enum class CoverMode { kGreedy, kExact, kAuto };

std::string_view cover_mode_name(CoverMode mode);
std::optional<CoverMode> parse_cover_mode(std::string_view name);

// Sets every node's cover to an edge cover of its bag. kAuto resolves to
// kGreedy when the largest bag exceeds 12 vertices or the hypergraph has
// more than 64 edges, kExact otherwise.
Decomposition assign_covers(const Hypergraph& h, const Decomposition& d,
                            CoverMode mode);

// Width-1 decomposition of an alpha-acyclic hypergraph: one node per edge
// (id = edge id + 1) wired along the GYO absorption forest. Precondition:
// is_alpha_acyclic(h).
Decomposition join_tree(const Hypergraph& h);

// Drops every edge contained in another edge (for equal edges, the larger
// name goes). Generalized hypertree width is unchanged.
Hypergraph remove_subsumed_edges(const Hypergraph& h);

struct DecomposeOptions {
  Heuristic heuristic = Heuristic::kMinFill;
  CoverMode cover = CoverMode::kAuto;
  std::uint64_t seed = 0;
  bool preprocess = false;
};

// Alpha-acyclic input takes the join tree path; anything else goes
// ordering -> bucket elimination -> pruning -> covers. The result always
// validates against h.
Decomposition decompose(const Hypergraph& h, const DecomposeOptions& options = {});

}  // namespace ghd

#endif  // GHD_HEURISTICS_H_
