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

#include "ghd/cover.h"

#include <algorithm>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ghd/error.h"

namespace ghd {
namespace {

using Bits = boost::dynamic_bitset<>;

Bits target_bits(const Hypergraph& h, std::span<const VertexId> target) {
  Bits bits(h.num_vertices());
  for (VertexId v : target) {
    if (v < 0 || v >= static_cast<VertexId>(h.num_vertices())) {
      throw Error(ErrorCode::kUnknownVertex,
                  "vertex id " + std::to_string(v) + " is out of range");
    }
    bits.set(v);
  }
  return bits;
}

// Edge vertex sets restricted to the target.
std::vector<Bits> restricted_edges(const Hypergraph& h, const Bits& target) {
  std::vector<Bits> edges;
  edges.reserve(h.num_edges());
  for (const Edge& e : h.edges()) {
    Bits bits(h.num_vertices());
    for (VertexId v : e.vertices) bits.set(v);
    edges.push_back(bits & target);
  }
  return edges;
}

VertexSet to_set(const Bits& bits) {
  VertexSet out;
  for (auto v = bits.find_first(); v != Bits::npos; v = bits.find_next(v)) {
    out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

class BranchAndBound {
 public:
  BranchAndBound(const Hypergraph& h, std::vector<Bits> edges,
                 std::size_t upper_bound)
      : h_(h), edges_(std::move(edges)), best_size_(upper_bound + 1) {}

  void search(const Bits& uncovered) {
    if (uncovered.none()) {
      if (stack_.size() < best_size_) {
        best_size_ = stack_.size();
        best_ = stack_;
      }
      return;
    }
    // At least one more edge is needed.
    if (stack_.size() + 1 >= best_size_) return;
    const auto v = static_cast<VertexId>(uncovered.find_first());
    for (EdgeId e : h_.incident_edges(v)) {
      stack_.push_back(e);
      search(uncovered - edges_[e]);
      stack_.pop_back();
      if (stack_.size() + 1 >= best_size_) return;
    }
  }

  const std::optional<std::vector<EdgeId>>& best() const { return best_; }

 private:
  const Hypergraph& h_;
  std::vector<Bits> edges_;
  std::size_t best_size_;
  std::vector<EdgeId> stack_;
  std::optional<std::vector<EdgeId>> best_;
};

}  // namespace

std::vector<std::string> CoverResult::chosen_names(const Hypergraph& h) const {
  std::vector<std::string> names;
  names.reserve(chosen.size());
  for (EdgeId e : chosen) names.push_back(h.edge_name(e));
  return names;
}

CoverResult greedy_cover(const Hypergraph& h, std::span<const VertexId> target) {
  const Bits goal = target_bits(h, target);
  const std::vector<Bits> edges = restricted_edges(h, goal);
  Bits uncovered = goal;
  CoverResult result;
  while (uncovered.any()) {
    std::size_t best_gain = 0;
    EdgeId best = -1;
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
      const std::size_t gain = (edges[e] & uncovered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = e;
      }
    }
    if (best < 0) {
      throw Error(ErrorCode::kUncoverable,
                  "no edge covers the remaining target vertices");
    }
    result.chosen.push_back(best);
    uncovered -= edges[best];
  }
  result.covered = to_set(goal);
  result.exact = result.chosen.size() <= 1;
  return result;
}

CoverResult exact_cover(const Hypergraph& h, std::span<const VertexId> target,
                        std::optional<std::size_t> upper_bound) {
  const Bits goal = target_bits(h, target);
  if (goal.none()) return {{}, {}, true};
  const std::size_t bound =
      upper_bound ? *upper_bound : greedy_cover(h, target).size();

  BranchAndBound search(h, restricted_edges(h, goal), bound);
  search.search(goal);
  if (!search.best()) {
    throw Error(ErrorCode::kBoundExceeded,
                "no cover with at most " + std::to_string(bound) + " edges");
  }
  CoverResult result;
  result.chosen = *search.best();
  std::sort(result.chosen.begin(), result.chosen.end());
  result.covered = to_set(goal);
  result.exact = true;
  return result;
}

}  // namespace ghd
