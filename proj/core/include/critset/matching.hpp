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

#ifndef CRITSET_MATCHING_HPP_
#define CRITSET_MATCHING_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "critset/graph.hpp"

namespace critset {

/// Symmetric mate map. match() keeps both directions consistent.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::size_t n) : mate_(n, kUnmatched) {}

  std::size_t order() const { return mate_.size(); }
  std::size_t size() const { return pairs_; }

  std::optional<VertexId> mate(VertexId v) const {
    if (mate_[v] == kUnmatched) return std::nullopt;
    return mate_[v];
  }
  bool is_matched(VertexId v) const { return mate_[v] != kUnmatched; }

  void match(VertexId u, VertexId v);
  void unmatch(VertexId v);

  /// Matched pairs as edges with u < v, ascending.
  std::vector<Edge> pairs() const;

  /// M(X): the mates of the matched members of X.
  VertexSet mates_of(const VertexSet& x) const;

  /// Symmetric, every pair an edge of g, and orders agree.
  bool is_valid_for(const Graph& g) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  static constexpr VertexId kUnmatched = std::numeric_limits<VertexId>::max();

  std::vector<VertexId> mate_;
  std::size_t pairs_ = 0;
};

/// Hopcroft-Karp. Phases layer from the free A-vertices; every scan runs in
/// ascending vertex id, so the returned matching is reproducible.
Matching max_matching(const Graph& g, const Bipartition& bp);

/// True if some augmenting path starts at a free A-vertex (Berge check).
bool has_augmenting_path(const Graph& g, const Bipartition& bp, const Matching& m);

/// Every vertex reachable from the unmatched vertices of `from` along paths
/// that leave `from` by non-matching edges and return by matching edges.
/// Seeds are included.
VertexSet alternating_reachable(const Graph& g, const Bipartition& bp, const Matching& m,
                                Side from);

/// Koenig cover (A - Z) | (B & Z), Z reachable from the free A-vertices.
VertexSet min_vertex_cover(const Graph& g, const Bipartition& bp, const Matching& m);

/// Complement of the Koenig cover for a maximum matching.
VertexSet max_independent_set(const Graph& g, const Bipartition& bp);

/// Certificate that no matching of `source` into `target` exists:
/// |N(violator) & target| < |violator|.
struct HallViolator {
  VertexSet violator;
};

/// Looks for a matching saturating `source` using only source-target edges.
/// Exactly one of the alternatives is returned. Throws GraphError if the
/// two sets overlap.
std::variant<Matching, HallViolator> saturating_matching(const Graph& g, const VertexSet& source,
                                                         const VertexSet& target);

}  // namespace critset

#endif  // CRITSET_MATCHING_HPP_
