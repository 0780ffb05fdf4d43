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

#ifndef GHD_EXACT_H_
#define GHD_EXACT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ghd/decomposition.h"
#include "ghd/hypergraph.h"

namespace ghd {

inline constexpr std::size_t kDefaultVertexLimit = 10;

struct ExactResult {
  std::size_t ghw = 0;
  // Built from `ordering` by bucket elimination, bag pruning and exact
  // covers; validates and has width ghw.
  Decomposition witness;
  // Lexicographically smallest elimination order attaining ghw.
  std::vector<VertexId> ordering;
  // Complete orderings evaluated (branches cut early are not counted).
  std::uint64_t orderings_searched = 0;
};

// Generalized hypertree width by sweeping every elimination order: ghw is
// the minimum over orders of the largest edge-cover number among the bags.
// Orders are walked in lexicographic order sharing prefixes; a prefix is
// abandoned once its largest bag cover reaches the best width found, which
// leaves the minimum and the first minimising order unchanged. Throws
// Error(kTooLarge) when the hypergraph has more than `limit` (or 64)
// vertices.
ExactResult ghw_exact(const Hypergraph& h,
                      std::size_t limit = kDefaultVertexLimit);

struct DecideResult {
  bool holds = false;
  std::optional<Decomposition> witness;  // set iff holds
};

// Whether ghw(h) <= k. Stops at the first order whose bags all have cover
// number at most k. Throws Error(kTooLarge) as ghw_exact does.
DecideResult decide_ghw_le_k(const Hypergraph& h, std::size_t k,
                             std::size_t limit = kDefaultVertexLimit);

}  // namespace ghd

#endif  // GHD_EXACT_H_
