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


#include "critset/vertex_set.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

namespace critset {
namespace {

class VertexSetModes : public ::testing::TestWithParam<std::size_t> {};

TEST_P(VertexSetModes, InsertEraseContains) {
  const std::size_t n = GetParam();
  VertexSet s(n);
  EXPECT_TRUE(s.empty());
  s.insert(0);
  s.insert(static_cast<VertexId>(n - 1));
  s.insert(3);
  s.insert(3);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.ids(), (std::vector<VertexId>{0, 3, static_cast<VertexId>(n - 1)}));
  s.erase(3);
  s.erase(3);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_THROW(s.insert(static_cast<VertexId>(n)), std::out_of_range);
}

TEST_P(VertexSetModes, Algebra) {
  const std::size_t n = GetParam();
  const VertexSet a = VertexSet::from_ids(n, {1, 2, 5});
  const VertexSet b = VertexSet::from_ids(n, {2, 5, 7});
  EXPECT_EQ((a | b).ids(), (std::vector<VertexId>{1, 2, 5, 7}));
  EXPECT_EQ((a & b).ids(), (std::vector<VertexId>{2, 5}));
  EXPECT_EQ((a - b).ids(), (std::vector<VertexId>{1}));
  EXPECT_TRUE((a & b).is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE((a - b).intersects(b));
  EXPECT_EQ(a.complement().size(), n - 3);
  EXPECT_EQ(a.complement().complement(), a);
  EXPECT_EQ(VertexSet::full(n).size(), n);
}

TEST_P(VertexSetModes, ForEachAscending) {
  const std::size_t n = GetParam();
  const VertexSet s = VertexSet::from_ids(n, {9, 4, 0, 6});
  std::vector<VertexId> seen;
  s.for_each([&](VertexId v) { seen.push_back(v); });
  EXPECT_EQ(seen, s.ids());
}

INSTANTIATE_TEST_SUITE_P(MaskAndSorted, VertexSetModes, ::testing::Values(10, 64, 65, 128, 129, 1000));

TEST(VertexSet, UniverseMismatchThrows) {
  VertexSet a(10);
  const VertexSet b(11);
  EXPECT_THROW(a |= b, std::invalid_argument);
  EXPECT_THROW((void)a.is_subset_of(b), std::invalid_argument);
}

TEST(VertexSet, EmptyUniverse) {
  const VertexSet s = VertexSet::full(0);
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(s.complement(), s);
}

}  // namespace
}  // namespace critset
