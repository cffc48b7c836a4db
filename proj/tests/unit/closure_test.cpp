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


#include <gtest/gtest.h>

#include "brute.hpp"
#include "critset/matching.hpp"
#include "critset/oracle.hpp"
#include "critset/random.hpp"
#include "critset/verify.hpp"

namespace critset {
namespace {

// Random bipartite graph on k+k vertices with the matching i -- k+i planted.
Graph planted(std::size_t k, double p, std::uint64_t seed, std::uint64_t i) {
  GeneratorParams params;
  params.kind = GraphKind::kBipartite;
  params.n_a = k;
  params.n_b = k;
  params.p = p;
  std::vector<Edge> e = random_graph(params, seed, i).graph.edges();
  for (VertexId v = 0; v < k; ++v) e.push_back({v, static_cast<VertexId>(k + v)});
  return build_graph(2 * k, e);
}

TEST(LemmaExpand, FourCycle) {
  // a=0 b=1 c=2 d=3
  const Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const Bipartition bp = bipartition(g);
  const VertexSet s = VertexSet::from_ids(4, {1, 3});
  for (const bool other : {false, true}) {
    Matching m(4);
    if (other) {
      m.match(0, 3);
      m.match(1, 2);
    } else {
      m.match(0, 1);
      m.match(2, 3);
    }
    EXPECT_EQ(lemma_expand(g, bp, m, s, VertexSet::from_ids(4, {0})), VertexSet::from_ids(4, {0, 2}));
  }
}

TEST(LemmaExpand, Preconditions) {
  const Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const Bipartition bp = bipartition(g);
  const VertexSet s = VertexSet::from_ids(4, {1, 3});
  Matching m(4);
  m.match(0, 1);
  EXPECT_THROW(lemma_expand(g, bp, m, s, VertexSet::from_ids(4, {0})), PreconditionError);  // not perfect
  m.match(2, 3);
  EXPECT_THROW(lemma_expand(g, bp, m, s, VertexSet::from_ids(4, {1})), PreconditionError);  // meets s
  EXPECT_THROW(lemma_expand(g, bp, m, VertexSet::from_ids(4, {1}), VertexSet::from_ids(4, {0})),
               PreconditionError);  // s not maximum
  EXPECT_THROW(lemma_expand(g, bp, m, s, VertexSet::from_ids(4, {0, 1})), PreconditionError);
}

TEST(AlternatingClosure, FreeVertexRejected) {
  const Graph g = build_graph(3, {{0, 1}, {1, 2}});
  const Bipartition bp = bipartition(g);
  Matching m(3);
  m.match(0, 1);
  try {
    alternating_closure(g, bp, m, VertexSet::from_ids(3, {0, 2}), VertexSet::from_ids(3, {1}));
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("unmatched"), std::string::npos);
  }
}

TEST(AlternatingClosure, IteratedLemmaReachesClosure) {
  std::size_t checked = 0;
  for (std::uint64_t i = 0; i < 120; ++i) {
    const std::size_t k = 2 + i % 5;
    const Graph g = planted(k, 0.3, 17, i);
    const Bipartition bp = bipartition(g);
    const Matching m = max_matching(g, bp);
    ASSERT_EQ(2 * m.size(), g.order());
    const brute::Small b = brute::from_graph(g);
    const auto omega = brute::maximum_independent_sets(b);
    for (auto s_mask : omega) {
      const VertexSet s = brute::to_set(b.n, s_mask);
      for (VertexId v = 0; v < g.order(); ++v) {
        if (s.contains(v)) continue;
        VertexSet x = VertexSet::from_ids(g.order(), {v});
        for (;;) {
          const VertexSet next = lemma_expand(g, bp, m, s, x);
          if (next == x) break;
          EXPECT_TRUE(x.is_subset_of(next));
          x = next;
        }
        const ClosureResult c = alternating_closure(g, bp, m, s, VertexSet::from_ids(g.order(), {v}));
        EXPECT_EQ(c.closure, x) << "instance " << i << " v=" << v;
        EXPECT_TRUE(is_independent(g, c.new_mis));
        EXPECT_EQ(static_cast<int>(c.new_mis.size()), brute::alpha(b));
        EXPECT_TRUE(c.closure.is_subset_of(c.new_mis));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 500u);
}

TEST(AlternatingClosure, NewMisIsMaximum) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    const Graph g = planted(4, 0.4, 23, i);
    const Bipartition bp = bipartition(g);
    const Matching m = max_matching(g, bp);
    const VertexSet s = bp.side(Side::A);
    const SetFamily omega = oracle_omega(g);
    // every independent start set inside B
    const auto b_ids = bp.side(Side::B).ids();
    for (std::uint32_t mask = 1; mask < (1u << b_ids.size()); ++mask) {
      VertexSet z0(g.order());
      for (std::size_t j = 0; j < b_ids.size(); ++j) {
        if (mask >> j & 1) z0.insert(b_ids[j]);
      }
      const ClosureResult c = alternating_closure(g, bp, m, s, z0);
      EXPECT_TRUE(omega.contains(c.new_mis));
      EXPECT_TRUE(z0.is_subset_of(c.closure));
    }
  }
}

}  // namespace
}  // namespace critset
