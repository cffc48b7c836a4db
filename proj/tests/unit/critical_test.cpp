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


#include "critset/critical.hpp"

#include <gtest/gtest.h>

#include "brute.hpp"
#include "critset/oracle.hpp"
#include "critset/random.hpp"

namespace critset {
namespace {

RandomGraph random_bipartite(std::size_t na, std::size_t nb, double p, std::uint64_t seed, std::uint64_t i) {
  GeneratorParams params;
  params.kind = GraphKind::kBipartite;
  params.n_a = na;
  params.n_b = nb;
  params.p = p;
  return random_graph(params, seed, i);
}

TEST(Critical, SingleVertex) {
  const Graph g = build_graph(1, {});
  const Bipartition bp = bipartition(g);
  const CriticalSummary s = summarize(g, bp);
  EXPECT_EQ(s.bundle.alpha, 1u);
  EXPECT_EQ(s.bundle.mu, 0u);
  EXPECT_EQ(s.bundle.dc, 1u);
  EXPECT_EQ(s.ker, VertexSet::full(1));
  EXPECT_EQ(s.core, VertexSet::full(1));
}

TEST(Critical, SummaryMatchesBruteForce) {
  for (std::uint64_t i = 0; i < 400; ++i) {
    const double p = (i % 3 == 0) ? 0.1 : (i % 3 == 1) ? 0.3 : 0.5;
    const RandomGraph rg = random_bipartite(1 + i % 7, 1 + (i / 7) % 7, p, 99, i);
    const Graph& g = rg.graph;
    const Bipartition bp = Bipartition::from_side_a(g, *rg.side_a);
    const brute::Small b = brute::from_graph(g);
    const auto a_mask = brute::to_mask(bp.side(Side::A));
    const auto b_mask = brute::to_mask(bp.side(Side::B));
    const brute::Sets ref = brute::sets(b);
    const CriticalSummary s = summarize(g, bp);
    SCOPED_TRACE(i);

    EXPECT_EQ(static_cast<int>(s.bundle.alpha), brute::alpha(b));
    EXPECT_EQ(static_cast<int>(s.bundle.mu), brute::mu(b));
    EXPECT_EQ(static_cast<int>(s.bundle.dc), brute::dc(b));
    EXPECT_EQ(static_cast<int>(s.bundle.idc), brute::idc(b));
    EXPECT_EQ(static_cast<int>(*s.bundle.delta0_a), brute::delta0(b, a_mask));
    EXPECT_EQ(static_cast<int>(*s.bundle.delta0_b), brute::delta0(b, b_mask));

    const auto fam_a = brute::side_critical_sets(b, a_mask);
    const auto fam_b = brute::side_critical_sets(b, b_mask);
    EXPECT_EQ(brute::to_mask(s.ker_a), brute::meet(fam_a, a_mask));
    EXPECT_EQ(brute::to_mask(s.ker_b), brute::meet(fam_b, b_mask));
    EXPECT_EQ(brute::to_mask(s.diadem_a), brute::join(fam_a));
    EXPECT_EQ(brute::to_mask(s.diadem_b), brute::join(fam_b));

    EXPECT_EQ(brute::to_mask(s.ker), ref.ker);
    EXPECT_EQ(brute::to_mask(s.diadem), ref.diadem);
    EXPECT_EQ(brute::to_mask(s.core), ref.core);
    EXPECT_EQ(brute::to_mask(s.corona), ref.corona);

    EXPECT_EQ(s, summarize(g, bp, Execution::kParallel));
    EXPECT_EQ(critical_difference(g, bp), s.bundle.dc);
    EXPECT_EQ(ker(g, bp), s.ker);
    EXPECT_EQ(diadem(g, bp), s.diadem);
    EXPECT_EQ(core(g, bp), s.core);
    EXPECT_EQ(corona(g, bp), s.corona);
  }
}

TEST(Critical, DeletionRoutesOnGeneralGraphs) {
  const AlphaFn alpha = oracle_alpha_fn();
  for (std::uint64_t i = 0; i < 120; ++i) {
    GeneratorParams params;
    params.n = 1 + i % 9;
    params.p = 0.35;
    const Graph g = random_graph(params, 8, i).graph;
    const brute::Sets ref = brute::sets(brute::from_graph(g));
    EXPECT_EQ(brute::to_mask(core_by_deletion(g, alpha)), ref.core) << i;
    EXPECT_EQ(brute::to_mask(corona(g, alpha)), ref.corona) << i;
    EXPECT_EQ(critical_difference(g), oracle_dc(g));
  }
}

TEST(Critical, KonigAlphaNeedsBipartite) {
  const Graph tri = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_THROW(konig_alpha(tri), NotBipartiteError);
  EXPECT_EQ(konig_alpha(build_graph(3, {{0, 1}, {1, 2}})), 2u);
}

TEST(Critical, Predicates) {
  // P3: 0-1-2
  const Graph g = build_graph(3, {{0, 1}, {1, 2}});
  const Bipartition bp = bipartition(g);
  const VertexSet ends = VertexSet::from_ids(3, {0, 2});
  EXPECT_TRUE(is_critical(g, ends));
  EXPECT_TRUE(is_critical_independent(g, ends));
  EXPECT_FALSE(is_critical_independent(g, VertexSet::from_ids(3, {0})));
  EXPECT_TRUE(is_side_critical(g, bp, ends, Side::A));
  EXPECT_FALSE(is_side_critical(g, bp, VertexSet::from_ids(3, {1}), Side::B));
  EXPECT_THROW(is_side_critical(g, bp, VertexSet::from_ids(3, {1}), Side::A), GraphError);
  EXPECT_EQ(delta0(g, bp, Side::A), 1u);
  EXPECT_EQ(delta0(g, bp, Side::B), 0u);
}

TEST(KerCertificate, AcceptsKerRejectsLarger) {
  // leaves 0,1 on centre 2, centre joined to 3, 3 joined to 4
  const Graph g = build_graph(5, {{0, 2}, {1, 2}, {2, 3}, {3, 4}});
  const VertexSet k = ker(g, bipartition(g));
  EXPECT_EQ(k, VertexSet::from_ids(5, {0, 1}));
  EXPECT_TRUE(ker_certificate(g, k).is_ker);

  const VertexSet bigger = VertexSet::from_ids(5, {0, 1, 4});  // critical, not minimal
  ASSERT_TRUE(is_critical_independent(g, bigger));
  const KerCertificate c = ker_certificate(g, bigger);
  EXPECT_FALSE(c.is_ker);
  ASSERT_TRUE(c.removable.has_value());
  ASSERT_TRUE(c.witness.has_value());
  const VertexSet& y = *c.witness;
  EXPECT_FALSE(y.empty());
  EXPECT_TRUE(y.is_subset_of(neighborhood(g, bigger)));
  EXPECT_EQ((neighborhood(g, y) & bigger).size(), y.size());

  EXPECT_THROW(ker_certificate(g, VertexSet::from_ids(5, {0, 2})), NotCriticalIndependentError);
  EXPECT_THROW(ker_certificate(g, VertexSet::from_ids(5, {3})), NotCriticalIndependentError);
}

TEST(KerCertificate, RandomBipartite) {
  for (std::uint64_t i = 0; i < 150; ++i) {
    const RandomGraph rg = random_bipartite(1 + i % 6, 1 + (i / 6) % 6, 0.3, 12, i);
    const Graph& g = rg.graph;
    const Bipartition bp = Bipartition::from_side_a(g, *rg.side_a);
    EXPECT_TRUE(ker_certificate(g, ker(g, bp)).is_ker) << i;
    for (const auto& x : oracle_critical_independent_family(g).family.members()) {
      EXPECT_EQ(ker_certificate(g, x).is_ker, x == ker(g, bp)) << i;
    }
  }
}

}  // namespace
}  // namespace critset
