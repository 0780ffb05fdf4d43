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

#ifndef GHD_COVER_H_
#define GHD_COVER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ghd/hypergraph.h"

namespace ghd {

// Edges chosen to cover a target vertex set.
struct CoverResult {
  // Greedy: pick order. Exact: ascending edge id (= name order).
  std::vector<EdgeId> chosen;
  // The target vertices covered; equals the target on success.
  VertexSet covered;
  // True iff the cover is known to be of minimum cardinality.
  bool exact = false;

  std::size_t size() const { return chosen.size(); }
  std::vector<std::string> chosen_names(const Hypergraph& h) const;
};

// Classic greedy set cover: take the edge covering the most still-uncovered
// target vertices, smallest name on ties. The target must be a subset of
// the vertices (Error(kUnknownVertex) otherwise); Error(kUncoverable) is
// unreachable for valid input.
CoverResult greedy_cover(const Hypergraph& h, std::span<const VertexId> target);

// Minimum-cardinality cover by depth-first branch and bound: branch on the
// smallest uncovered vertex, trying its incident edges in name order, and
// cut any branch that cannot beat the best cover found so far. Returns the
// first minimum cover in that search order, which does not depend on the
// bound. upper_bound defaults to the greedy cover size; Error(kBoundExceeded)
// when no cover of at most upper_bound edges exists.
CoverResult exact_cover(const Hypergraph& h, std::span<const VertexId> target,
                        std::optional<std::size_t> upper_bound = std::nullopt);

}  // namespace ghd

#endif  // GHD_COVER_H_
