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


#include "critset/format.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "test_util.hpp"

namespace critset {
namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(Parse, NumericDocument) {
  const GraphDocument d = parse_graph("# leading comment\ngraph p3 3 2\n0 1   # trailing\n\n1 2\n");
  EXPECT_EQ(d.name, "p3");
  EXPECT_EQ(d.n, 3u);
  EXPECT_TRUE(d.names.empty());
  EXPECT_EQ(d.edges, (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_FALSE(d.side_a);
  EXPECT_EQ(d.vertex_name(2), "2");
}

TEST(Parse, SingleVertex) {
  const GraphDocument d = parse_graph("graph k1 1 0\n");
  EXPECT_EQ(d.n, 1u);
  EXPECT_EQ(d.graph().order(), 1u);
  EXPECT_EQ(d.graph().size(), 0u);
}

TEST(Parse, NamedDocumentFirstAppearanceOrder) {
  const GraphDocument d = parse_graph("graph t 4 2\nside A: x z\nx y\nz y\n");
  EXPECT_EQ(d.names, (std::vector<std::string>{"x", "z", "y", "_3"}));
  ASSERT_TRUE(d.side_a);
  EXPECT_EQ(*d.side_a, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(d.declared_bipartition()->side(Side::B), VertexSet::from_ids(4, {2, 3}));
  EXPECT_EQ(d.vertex_name(3), "_3");
}

TEST(Parse, SideMustTwoColourTheEdges) {
  EXPECT_EQ(error_line("graph t 3 2\nside A: x\nx y\nz y\n"), 4u);  // z lands on B with y
}

TEST(Parse, VerticesLineFixesIds) {
  const GraphDocument d = parse_graph("graph t 3 1\nvertices: c b a\na b\n");
  EXPECT_EQ(d.names, (std::vector<std::string>{"c", "b", "a"}));
  EXPECT_EQ(d.edges, (std::vector<Edge>{{2, 1}}));
}

TEST(Parse, NumericVerticesLineMakesNamesOfDigits) {
  const GraphDocument d = parse_graph("graph t 2 1\nvertices: 1 0\n0 1\n");
  EXPECT_EQ(d.names, (std::vector<std::string>{"1", "0"}));
}

TEST(Parse, ErrorsReportTheLine) {
  EXPECT_EQ(error_line("graph g 3 1\n# c\n1 1\n"), 3u);
  EXPECT_EQ(error_line("graph g 3 2\n0 1\n1 0\n"), 3u);           // duplicate
  EXPECT_EQ(error_line("graph g 3 3\n0 1\n1 2\n"), 1u);           // count mismatch
  EXPECT_EQ(error_line("graph g 3 1\n0 5\n"), 2u);                // out of range
  EXPECT_EQ(error_line("\ngrph g 3 1\n0 1\n"), 2u);               // header
  EXPECT_EQ(error_line("graph g x 1\n0 1\n"), 1u);
  EXPECT_EQ(error_line("graph g 3 1\n0 1 2\n"), 2u);
  EXPECT_EQ(error_line("graph g 2 1\na b\nside A: a\n"), 3u);
  EXPECT_EQ(error_line("graph g 2 1\nside A: a\nside A: b\na b\n"), 3u);
  EXPECT_EQ(error_line("graph g 2 1\nside A: a a\na b\n"), 2u);
  EXPECT_EQ(error_line("graph g 2 1\na b\nc d\n"), 3u);  // too many names and edges
  EXPECT_EQ(error_line(""), 0u);
}

TEST(Parse, SelfLoopMessage) {
  try {
    parse_graph("graph g 3 1\n1 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(std::string(e.what()), "line 2: " + e.message());
    EXPECT_NE(e.message().find("self-loop"), std::string::npos);
  }
}

TEST(RoundTrip, Fixtures) {
  for (const char* name : {"fig2", "fig1-g1", "fig1-g2", "fig14-g1", "fig14-g2", "fig1777", "fig222-g1",
                           "fig222-g2", "fig17888-g1", "fig17888-g2"}) {
    const GraphDocument d = testutil::fixture(name);
    const std::string text = render_graph(d);
    EXPECT_EQ(parse_graph(text), d) << name;
    EXPECT_EQ(render_graph(parse_graph(text)), text) << name;
  }
}

TEST(RoundTrip, OddShapes) {
  const char* docs[] = {
      "graph a 3 1\nvertices: c b a\na b\n",
      "graph b 4 1\nvertices: 1 0 x y\n0 1\n",
      "graph c 5 0\n",
      "graph d 5 2\nside A: 4 0\n0 1\n4 3\n",
      "graph e 4 1\nq p\n",
  };
  for (const char* text : docs) {
    const GraphDocument d = parse_graph(text);
    EXPECT_EQ(parse_graph(render_graph(d)), d) << text;
  }
}

TEST(RoundTrip, Generated) {
  GeneratorParams p;
  p.kind = GraphKind::kBipartite;
  p.n_a = 6;
  p.n_b = 9;
  p.p = 0.3;
  for (std::uint64_t i = 0; i < 30; ++i) {
    const GraphDocument d = generate(p, 5, i);
    EXPECT_EQ(parse_graph(render_graph(d)), d);
  }
}

TEST(Render, RejectsBadNames) {
  GraphDocument d;
  d.name = "has space";
  d.n = 1;
  EXPECT_THROW(render_graph(d), std::invalid_argument);
}

TEST(Generate, NamesAndSides) {
  GeneratorParams p;
  p.kind = GraphKind::kBipartite;
  p.n_a = 12;
  p.n_b = 12;
  p.p = 0.3;
  EXPECT_EQ(generate(p, 7).name, "bipartite-12x12-p0.3-seed7");
  EXPECT_EQ(generate(p, 7, 2).name, "bipartite-12x12-p0.3-seed7-i2");
  ASSERT_TRUE(generate(p, 7).side_a);
  EXPECT_EQ(generate(p, 7).side_a->size(), 12u);
  GeneratorParams q;
  q.n = 8;
  q.p = 0.3;
  EXPECT_EQ(generate(q, 42).name, "general-8-p0.3-seed42");
}

TEST(Generate, GoldenDocument) {
  std::ifstream in(std::string(CRITSET_GOLDEN_DIR) + "/bipartite-12x12-p0.3-seed7.graph", std::ios::binary);
  ASSERT_TRUE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  GeneratorParams p;
  p.kind = GraphKind::kBipartite;
  p.n_a = 12;
  p.n_b = 12;
  p.p = 0.3;
  EXPECT_EQ(render_graph(generate(p, 7)), ss.str());
}

TEST(DocumentFromGraph, KeepsEdgesAndSide) {
  const Graph g = build_graph(4, {{0, 1}, {2, 3}});
  const GraphDocument d = document_from_graph("x", g, VertexSet::from_ids(4, {0, 2}));
  EXPECT_EQ(d.graph(), g);
  EXPECT_EQ(*d.side_a, (std::vector<VertexId>{0, 2}));
}

TEST(Load, MissingFileAndPathPrefix) {
  EXPECT_THROW(load_graph("/nonexistent/file.graph"), std::runtime_error);
  const std::string path = std::string(CRITSET_TEST_DATA_DIR) + "/self-loop.graph";
  try {
    load_graph(path);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.source(), path);
    EXPECT_EQ(std::string(e.what()), path + ":3: self-loop on 1");
  }
}

}  // namespace
}  // namespace critset
