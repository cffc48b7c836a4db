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

#ifndef CRITSET_GRAPH_HPP_
#define CRITSET_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "critset/vertex_set.hpp"

namespace critset {

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph over dense vertex ids 0..n-1.
///
/// Adjacency is stored in CSR form, each neighbor list sorted ascending.
/// Instances are immutable once built; use build_graph() to construct one.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const { return edges_.size(); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(VertexId u, VertexId v) const;

  /// Normalized edge list: u < v, sorted lexicographically, no duplicates.
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
  std::vector<Edge> edges_;
};

/// Normalizes the edge list (orients u < v, sorts, drops duplicates).
/// Throws GraphError on self-loops or out-of-range endpoints.
Graph build_graph(std::size_t n, std::span<const Edge> edges);
Graph build_graph(std::size_t n, std::initializer_list<Edge> edges);

VertexSet neighborhood(const Graph& g, const VertexSet& x);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& x);

/// d(X) = |X| - |N(X)|. d(empty set) is 0.
std::int64_t difference(const Graph& g, const VertexSet& x);

bool is_independent(const Graph& g, const VertexSet& x);

/// G[V - W]. `to_original[i]` is the id in the parent graph of vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> to_original;
};

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& w);

enum class Side : std::uint8_t { A, B };

constexpr Side opposite(Side s) { return s == Side::A ? Side::B : Side::A; }
constexpr const char* side_name(Side s) { return s == Side::A ? "A" : "B"; }

class Bipartition {
 public:
  Bipartition() = default;

  /// Validates that `side_a` and its complement 2-color `g`.
  static Bipartition from_side_a(const Graph& g, VertexSet side_a);

  const VertexSet& side(Side s) const { return s == Side::A ? a_ : b_; }
  Side side_of(VertexId v) const { return a_.contains(v) ? Side::A : Side::B; }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  Bipartition(VertexSet a, VertexSet b) : a_(std::move(a)), b_(std::move(b)) {}

  VertexSet a_;
  VertexSet b_;
};

/// Vertices of an odd closed walk, listed in cycle order (simple cycle).
struct OddCycle {
  std::vector<VertexId> vertices;
};

class NotBipartiteError : public GraphError {
 public:
  explicit NotBipartiteError(OddCycle cycle);
  const OddCycle& cycle() const { return cycle_; }

 private:
  OddCycle cycle_;
};

/// Deterministic 2-coloring: in each component the smallest id is colored A;
/// isolated vertices land in A.
std::variant<Bipartition, OddCycle> find_bipartition(const Graph& g);

/// Throwing form of find_bipartition().
Bipartition bipartition(const Graph& g);

bool is_bipartite(const Graph& g);

}  // namespace critset

#endif  // CRITSET_GRAPH_HPP_
