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

#include "ghd/exact.h"

#include <bit>
#include <limits>
#include <string>
#include <unordered_map>

#include "ghd/cover.h"
#include "ghd/error.h"
#include "ghd/heuristics.h"

namespace ghd {
namespace {

using Mask = std::uint64_t;

constexpr std::size_t kMaskBits = 64;

void check_size(const Hypergraph& h, std::size_t limit) {
  const std::size_t n = h.num_vertices();
  if (n > limit || n > kMaskBits) {
    throw Error(ErrorCode::kTooLarge,
                "hypergraph has " + std::to_string(n) +
                    " vertices; the exact search accepts at most " +
                    std::to_string(std::min(limit, kMaskBits)));
  }
}

// Exhaustive walk over elimination orders with the graph held as adjacency
// masks. Bag cover numbers are memoised by bag.
class OrderingSweep {
 public:
  // Cover numbers above `cap` are only known to exceed it.
  OrderingSweep(const Hypergraph& h, std::size_t cap)
      : h_(h), n_(h.num_vertices()), cap_(cap) {
    const PrimalGraph g = primal_graph(h);
    adjacency_.resize(n_, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      for (VertexId w : g.neighbors(static_cast<VertexId>(v))) {
        adjacency_[v] |= Mask{1} << w;
      }
    }
  }

  // Minimum over orders of the largest bag cover, considering only orders
  // whose value is at most best_allowed; false when none qualifies.
  // `first_only` ends the walk at the first qualifying order.
  bool run(std::size_t best_allowed, bool first_only) {
    best_ = best_allowed + 1;
    first_only_ = first_only;
    done_ = false;
    prefix_.clear();
    const Mask all = n_ == kMaskBits ? ~Mask{0} : (Mask{1} << n_) - 1;
    walk(all, adjacency_, 0);
    return best_order_.has_value();
  }

  std::size_t best() const { return best_; }
  const std::optional<std::vector<VertexId>>& best_order() const {
    return best_order_;
  }
  std::uint64_t leaves() const { return leaves_; }

 private:
  std::size_t cover_number(Mask bag) {
    auto it = memo_.find(bag);
    if (it != memo_.end()) return it->second;
    VertexSet target;
    for (Mask rest = bag; rest != 0; rest &= rest - 1) {
      target.push_back(std::countr_zero(rest));
    }
    std::size_t size;
    try {
      size = exact_cover(h_, target, cap_).size();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBoundExceeded) throw;
      size = cap_ + 1;
    }
    memo_.emplace(bag, size);
    return size;
  }

  void walk(Mask remaining, const std::vector<Mask>& adjacency,
            std::size_t current) {
    if (remaining == 0) {
      ++leaves_;
      if (current < best_) {
        best_ = current;
        best_order_ = prefix_;
        // No non-empty bag has cover number below 1.
        if (first_only_ || best_ <= 1) done_ = true;
      }
      return;
    }
    for (Mask rest = remaining; rest != 0 && !done_; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const Mask bit = Mask{1} << v;
      const Mask neighbours = adjacency[v];
      const std::size_t width =
          std::max(current, cover_number(neighbours | bit));
      if (width >= best_) continue;

      std::vector<Mask> next = adjacency;
      for (Mask ns = neighbours; ns != 0; ns &= ns - 1) {
        const int u = std::countr_zero(ns);
        next[u] = (next[u] | neighbours) & ~(Mask{1} << u) & ~bit;
      }
      next[v] = 0;
      prefix_.push_back(v);
      walk(remaining & ~bit, next, width);
      prefix_.pop_back();
    }
  }

  const Hypergraph& h_;
  std::size_t n_;
  std::size_t cap_;
  std::vector<Mask> adjacency_;
  std::unordered_map<Mask, std::size_t> memo_;
  std::vector<VertexId> prefix_;
  std::size_t best_ = 0;
  std::optional<std::vector<VertexId>> best_order_;
  std::uint64_t leaves_ = 0;
  bool first_only_ = false;
  bool done_ = false;
};

Decomposition witness_for(const Hypergraph& h,
                          const std::vector<VertexId>& ordering) {
  return assign_covers(h, prune_subsumed_bags(bucket_elimination(h, ordering)),
                       CoverMode::kExact);
}

}  // namespace

ExactResult ghw_exact(const Hypergraph& h, std::size_t limit) {
  check_size(h, limit);
  ExactResult result;
  if (h.empty()) {
    result.orderings_searched = 1;
    return result;
  }
  // Any single bag is covered by at most |E| edges.
  OrderingSweep sweep(h, h.num_edges());
  sweep.run(h.num_edges(), false);
  result.ghw = sweep.best();
  result.ordering = *sweep.best_order();
  result.orderings_searched = sweep.leaves();
  result.witness = witness_for(h, result.ordering);
  return result;
}

DecideResult decide_ghw_le_k(const Hypergraph& h, std::size_t k,
                             std::size_t limit) {
  check_size(h, limit);
  if (h.empty()) return {true, Decomposition()};
  if (k == 0) return {false, std::nullopt};
  OrderingSweep sweep(h, k);
  if (!sweep.run(k, true)) return {false, std::nullopt};
  return {true, witness_for(h, *sweep.best_order())};
}

}  // namespace ghd
