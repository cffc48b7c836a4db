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


#include "critset/graph.hpp"

#include <gtest/gtest.h>

#include <variant>

namespace critset {
namespace {

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return build_graph(n, e);
}

TEST(Graph, BuildNormalizesEdges) {
  const Graph g = build_graph(4, {{2, 1}, {0, 3}, {1, 2}});
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 3}, {1, 2}}));
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_EQ(g.degree(1), 1u);
}

TEST(Graph, RejectsSelfLoopAndRange) {
  EXPECT_THROW(build_graph(3, {{1, 1}}), GraphError);
  EXPECT_THROW(build_graph(3, {{0, 3}}), GraphError);
}

TEST(Graph, DifferenceAndNeighborhood) {
  // star with centre 0 and leaves 1..3
  const Graph g = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  const VertexSet leaves = VertexSet::from_ids(4, {1, 2, 3});
  EXPECT_EQ(neighborhood(g, leaves), VertexSet::from_ids(4, {0}));
  EXPECT_EQ(closed_neighborhood(g, leaves), VertexSet::full(4));
  EXPECT_EQ(difference(g, leaves), 2);
  EXPECT_EQ(difference(g, VertexSet(4)), 0);
  EXPECT_TRUE(is_independent(g, leaves));
  EXPECT_FALSE(is_independent(g, VertexSet::from_ids(4, {0, 1})));
}

TEST(Graph, NeighborhoodLargeUniverse) {
  // cycle on 300 vertices: sets use the sorted representation
  std::vector<Edge> e;
  for (VertexId v = 0; v < 300; ++v) e.push_back({v, (v + 1) % 300});
  const Graph g = build_graph(300, e);
  const VertexSet x = VertexSet::from_ids(300, {0, 2, 150});
  EXPECT_EQ(neighborhood(g, x), VertexSet::from_ids(300, {1, 3, 149, 151, 299}));
  EXPECT_EQ(difference(g, x), -2);
  std::vector<VertexId> evens;
  for (VertexId v = 0; v < 300; v += 2) evens.push_back(v);
  const VertexSet ev = VertexSet::from_ids(300, evens);
  EXPECT_EQ(neighborhood(g, ev), ev.complement());
  EXPECT_TRUE(is_independent(g, ev));
}

TEST(Graph, DeleteVertices) {
  const Graph g = path(5);
  const InducedSubgraph h = delete_vertices(g, VertexSet::from_ids(5, {2}));
  EXPECT_EQ(h.graph.order(), 4u);
  EXPECT_EQ(h.graph.size(), 2u);
  EXPECT_EQ(h.to_original, (std::vector<VertexId>{0, 1, 3, 4}));
  EXPECT_TRUE(h.graph.adjacent(2, 3));
}

TEST(Bipartition, PathColouring) {
  const Bipartition bp = bipartition(path(5));
  EXPECT_EQ(bp.side(Side::A), VertexSet::from_ids(5, {0, 2, 4}));
  EXPECT_EQ(bp.side(Side::B), VertexSet::from_ids(5, {1, 3}));
  EXPECT_EQ(bp.side_of(3), Side::B);
}

TEST(Bipartition, IsolatedVerticesGoToA) {
  const Graph g = build_graph(3, {{1, 2}});
  const Bipartition bp = bipartition(g);
  EXPECT_TRUE(bp.side(Side::A).contains(0));
  EXPECT_TRUE(bp.side(Side::A).contains(1));
}

TEST(Bipartition, OddCycleWitness) {
  const Graph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const auto r = find_bipartition(g);
  ASSERT_TRUE(std::holds_alternative<OddCycle>(r));
  const auto& cyc = std::get<OddCycle>(r).vertices;
  ASSERT_EQ(cyc.size() % 2, 1u);
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    EXPECT_TRUE(g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
  }
  EXPECT_THROW(bipartition(g), NotBipartiteError);
  EXPECT_FALSE(is_bipartite(g));
}

TEST(Bipartition, DeclaredSideValidated) {
  const Graph g = path(3);
  EXPECT_NO_THROW(Bipartition::from_side_a(g, VertexSet::from_ids(3, {1})));
  EXPECT_THROW(Bipartition::from_side_a(g, VertexSet::from_ids(3, {0, 1})), GraphError);
}

}  // namespace
}  // namespace critset
