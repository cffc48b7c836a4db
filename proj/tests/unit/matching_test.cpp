// Copyright 2026 The critset Authors
//
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


#include "critset/matching.hpp"

#include <gtest/gtest.h>

#include <variant>

#include "brute.hpp"
#include "critset/random.hpp"

namespace critset {
namespace {

struct Instance {
  Graph g;
  Bipartition bp;
};

Instance random_bipartite(std::size_t na, std::size_t nb, double p, std::uint64_t seed, std::uint64_t i) {
  GeneratorParams params;
  params.kind = GraphKind::kBipartite;
  params.n_a = na;
  params.n_b = nb;
  params.p = p;
  RandomGraph rg = random_graph(params, seed, i);
  Bipartition bp = Bipartition::from_side_a(rg.graph, *rg.side_a);
  return {std::move(rg.graph), std::move(bp)};
}

TEST(Matching, MatchAndUnmatch) {
  Matching m(4);
  m.match(0, 2);
  EXPECT_EQ(m.size(), 1u);
  EXPECT_EQ(m.mate(2), 0u);
  m.match(0, 3);  // rematching drops the old pair
  EXPECT_FALSE(m.is_matched(2));
  EXPECT_EQ(m.size(), 1u);
  m.unmatch(3);
  EXPECT_EQ(m.size(), 0u);
  EXPECT_THROW(m.match(1, 1), GraphError);
}

TEST(Matching, PathOfFour) {
  const Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const Bipartition bp = bipartition(g);
  const Matching m = max_matching(g, bp);
  EXPECT_EQ(m.size(), 2u);
  EXPECT_TRUE(m.is_valid_for(g));
  EXPECT_EQ(m.pairs(), (std::vector<Edge>{{0, 1}, {2, 3}}));
}

TEST(Matching, RandomAgainstBruteForce) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    const double p = (i % 3 == 0) ? 0.1 : (i % 3 == 1) ? 0.3 : 0.6;
    const auto [g, bp] = random_bipartite(1 + i % 7, 1 + (i / 7) % 8, p, 11, i);
    const brute::Small b = brute::from_graph(g);
    const Matching m = max_matching(g, bp);
    ASSERT_TRUE(m.is_valid_for(g));
    EXPECT_EQ(static_cast<int>(m.size()), brute::mu(b)) << "instance " << i;
    EXPECT_FALSE(has_augmenting_path(g, bp, m));

    const VertexSet cover = min_vertex_cover(g, bp, m);
    EXPECT_EQ(cover.size(), m.size());
    for (const Edge& e : g.edges()) EXPECT_TRUE(cover.contains(e.u) || cover.contains(e.v));

    const VertexSet mis = max_independent_set(g, bp);
    EXPECT_TRUE(is_independent(g, mis));
    EXPECT_EQ(static_cast<int>(mis.size()), brute::alpha(b));
  }
}

TEST(Matching, ReproducibleAcrossCalls) {
  const auto [g, bp] = random_bipartite(30, 30, 0.1, 5, 0);
  EXPECT_EQ(max_matching(g, bp), max_matching(g, bp));
}

TEST(Matching, AugmentingPathDetected) {
  const Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const Bipartition bp = bipartition(g);
  Matching m(4);
  m.match(1, 2);
  EXPECT_TRUE(has_augmenting_path(g, bp, m));
}

TEST(Matching, AlternatingReachableIncludesSeeds) {
  // a0-b1, a2-b1, a2-b3 ; maximum matching a0b1 a2b3 leaves nothing free on A
  const Graph g = build_graph(5, {{0, 1}, {2, 1}, {2, 3}});
  const Bipartition bp = Bipartition::from_side_a(g, VertexSet::from_ids(5, {0, 2, 4}));
  const Matching m = max_matching(g, bp);
  const VertexSet z = alternating_reachable(g, bp, m, Side::A);
  EXPECT_TRUE(z.contains(4));  // isolated, unmatched
  EXPECT_EQ(z.size(), 1u);
}

TEST(Matching, SaturatingOrHallViolator) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto [g, bp] = random_bipartite(1 + i % 6, 1 + (i / 6) % 6, 0.3, 3, i);
    const VertexSet& a = bp.side(Side::A);
    const VertexSet& b = bp.side(Side::B);
    const auto r = saturating_matching(g, a, b);
    const brute::Small s = brute::from_graph(g);
    const bool hall = brute::delta0(s, brute::to_mask(a)) == 0;
    if (const auto* m = std::get_if<Matching>(&r)) {
      EXPECT_TRUE(hall);
      EXPECT_TRUE(m->is_valid_for(g));
      a.for_each([&](VertexId v) { EXPECT_TRUE(m->is_matched(v)); });
    } else {
      EXPECT_FALSE(hall);
      const VertexSet& y = std::get<HallViolator>(r).violator;
      EXPECT_TRUE(y.is_subset_of(a));
      EXPECT_LT((neighborhood(g, y) & b).size(), y.size());
    }
  }
  const Graph g = build_graph(2, {{0, 1}});
  EXPECT_THROW(saturating_matching(g, VertexSet::full(2), VertexSet::full(2)), GraphError);
}

}  // namespace
}  // namespace critset
