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

#include "doctest.h"
#include "ghd/error.h"
#include "ghd/formats.h"
#include "ghd/heuristics.h"
#include "support.h"

namespace ghd {
namespace {

using testing::make_hg;
using testing::naive_ghw;
using testing::path;
using testing::triangle;

Hypergraph clique(int n) {
  std::vector<EdgeSpec> specs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      specs.push_back({"e" + std::to_string(i) + std::to_string(j),
                       {std::string(1, 'a' + i), std::string(1, 'a' + j)}});
    }
  }
  return Hypergraph::build(specs);
}

void check_witness(const Hypergraph& h, const ExactResult& r) {
  CHECK(validate(h, r.witness).valid());
  CHECK(width(r.witness) == r.ghw);
}

TEST_CASE("exact width of the small fixtures") {
  for (const auto& [h, expected] :
       std::vector<std::pair<Hypergraph, std::size_t>>{
           {path(), 1}, {triangle(), 2}, {testing::single_edge(), 1}}) {
    CHECK(naive_ghw(h) == expected);
    const ExactResult r = ghw_exact(h);
    CHECK(r.ghw == expected);
    check_witness(h, r);
  }
}

TEST_CASE("exact witnesses are fixed") {
  CHECK(serialize_ghd(ghw_exact(triangle()).witness) ==
        "node 1 bag{a,b,c} cover{e1,e2}\n");
  CHECK(serialize_ghd(ghw_exact(path()).witness) ==
        "node 1 bag{a,b} cover{e1}\nnode 2 bag{b,c} cover{e2}\nedge 1 2\n");
  CHECK(ghw_exact(triangle()).ordering == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("exact width of cliques and cycles") {
  // A clique lies inside one bag of every tree decomposition; covering n
  // vertices with pairs takes ceil(n/2) edges.
  CHECK(ghw_exact(clique(4)).ghw == 2);
  CHECK(ghw_exact(clique(5)).ghw == 3);
  CHECK(naive_ghw(clique(5)) == 3);
  const Hypergraph cycle = make_hg({{"e1", {"a", "b"}}, {"e2", {"b", "c"}},
                                    {"e3", {"c", "d"}}, {"e4", {"d", "e"}},
                                    {"e5", {"a", "e"}}});
  CHECK(ghw_exact(cycle).ghw == 2);
  check_witness(cycle, ghw_exact(cycle));
}

TEST_CASE("empty hypergraph") {
  const ExactResult r = ghw_exact(Hypergraph());
  CHECK(r.ghw == 0);
  CHECK(r.witness.empty());
  const DecideResult d = decide_ghw_le_k(Hypergraph(), 0);
  CHECK(d.holds);
}

TEST_CASE("size guard") {
  std::vector<EdgeSpec> specs;
  for (int i = 0; i < 12; ++i) {
    specs.push_back({"e" + testing::two_digits(i),
                     {"v" + testing::two_digits(i), "v" + testing::two_digits((i + 1) % 12)}});
  }
  const Hypergraph ring = Hypergraph::build(specs);
  try {
    ghw_exact(ring);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTooLarge);
  }
  CHECK_THROWS_AS(decide_ghw_le_k(ring, 2), Error);
  CHECK(ghw_exact(ring, 12).ghw == 2);
  CHECK_THROWS_AS(ghw_exact(path(), 2), Error);
}

TEST_CASE("decide examples") {
  CHECK_FALSE(decide_ghw_le_k(triangle(), 1).holds);
  const DecideResult two = decide_ghw_le_k(triangle(), 2);
  REQUIRE(two.holds);
  REQUIRE(two.witness.has_value());
  CHECK(validate(triangle(), *two.witness).valid());
  CHECK(width(*two.witness) <= 2);
  CHECK_FALSE(decide_ghw_le_k(triangle(), 0).holds);

  Xoshiro256StarStar rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const Hypergraph h = testing::random_hypergraph(rng, 7, 8);
    CHECK(decide_ghw_le_k(h, h.num_edges()).holds);
  }
}

TEST_CASE("sweep agrees with the unpruned factorial sweep") {
  Xoshiro256StarStar rng(59);
  for (int trial = 0; trial < 150; ++trial) {
    const Hypergraph h = testing::random_hypergraph(rng, 6, 7, 2, 3);
    const ExactResult r = ghw_exact(h);
    CHECK(r.ghw == naive_ghw(h));
    check_witness(h, r);
    CHECK(testing::ordering_width(h, r.ordering) == r.ghw);
  }
}

TEST_CASE("oracle properties on random hypergraphs up to seven vertices") {
  Xoshiro256StarStar rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const Hypergraph h = testing::random_hypergraph(rng, 7, 8);
    const ExactResult r = ghw_exact(h);
    check_witness(h, r);
    CHECK((r.ghw == 1) == is_alpha_acyclic(h));
    CHECK(ghw_exact(testing::renamed(h, rng)).ghw == r.ghw);
    for (std::size_t k = 0; k <= h.num_edges() + 1; ++k) {
      CHECK(decide_ghw_le_k(h, k).holds == (r.ghw <= k));
    }
    for (Heuristic heuristic : {Heuristic::kMinDegree, Heuristic::kMinFill,
                                Heuristic::kMcs, Heuristic::kRandom}) {
      DecomposeOptions options{heuristic, CoverMode::kExact, 7, false};
      CHECK(width(decompose(h, options)) >= r.ghw);
    }
    // The oracle's own ordering is tight under the heuristic pipeline.
    const Decomposition tight = assign_covers(
        h, prune_subsumed_bags(bucket_elimination(h, r.ordering)), CoverMode::kExact);
    CHECK(width(tight) == r.ghw);
  }
}

TEST_CASE("adding a subsumed edge leaves the width unchanged") {
  Xoshiro256StarStar rng(67);
  for (int trial = 0; trial < 150; ++trial) {
    const Hypergraph h = testing::random_hypergraph(rng, 6, 6, 2, 4);
    const Edge& host = h.edges()[rng.below(h.num_edges())];
    EdgeSpec extra{"zz", {}};
    for (VertexId v : host.vertices) {
      if (extra.vertices.empty() || rng.below(2) == 0) {
        extra.vertices.push_back(h.vertex_name(v));
      }
    }
    auto specs = h.to_specs();
    specs.push_back(extra);
    CHECK(ghw_exact(Hypergraph::build(specs)).ghw == ghw_exact(h).ghw);
  }
}

}  // namespace
}  // namespace ghd
