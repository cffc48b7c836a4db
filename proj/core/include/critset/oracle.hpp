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

// Exhaustive reference computations for small graphs.
//
// Everything here enumerates: independent sets, subsets, matchings. The
// results are ground truth for the polynomial bipartite routines and the
// only source of ker/diadem for graphs that are not bipartite. Every entry
// point enforces a size bound from OracleLimits and throws OracleBoundError
// past it.

#ifndef CRITSET_ORACLE_HPP_
#define CRITSET_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "critset/graph.hpp"

namespace critset {

/// Environment variable that caps OracleLimits::max_order.
inline constexpr const char* kOracleBoundEnv = "CRITSET_ORACLE_BOUND";

struct OracleLimits {
  /// alpha, maximum independent sets, critical independent sets, mu.
  std::size_t max_order = 24;
  /// d_c over all 2^n vertex subsets.
  std::size_t max_subset_order = 20;
  /// Side-critical families enumerate 2^|side| subsets.
  std::size_t max_side = 20;

  /// Defaults, with max_order capped by CRITSET_ORACLE_BOUND when it is set.
  static OracleLimits from_environment();

  /// max_order set to `bound` (at most 64); the other limits capped by it.
  OracleLimits with_order_bound(std::size_t bound) const;
};

class OracleBoundError : public std::length_error {
 public:
  OracleBoundError(const std::string& what_exceeded, std::size_t value, std::size_t bound);
  std::size_t value() const { return value_; }
  std::size_t bound() const { return bound_; }

 private:
  std::size_t value_;
  std::size_t bound_;
};

enum class FamilyKind : std::uint8_t {
  kMaximumIndependent,
  kCriticalIndependent,
  kCritical,
  kSideCriticalA,
  kSideCriticalB,
};

const char* family_kind_name(FamilyKind kind);

enum class EnumerationOrder : std::uint8_t { kAscending, kDescending };

/// A complete family of vertex subsets, sorted by mask value.
class SetFamily {
 public:
  SetFamily(FamilyKind kind, std::size_t universe, std::vector<std::uint64_t> masks);

  FamilyKind kind() const { return kind_; }
  std::size_t universe() const { return universe_; }
  std::size_t size() const { return masks_.size(); }
  bool empty() const { return masks_.empty(); }

  const std::vector<std::uint64_t>& masks() const { return masks_; }
  VertexSet member(std::size_t i) const;
  std::vector<VertexSet> members() const;

  bool contains(const VertexSet& s) const;

  /// Intersection of all members; the full universe for an empty family.
  VertexSet intersection() const;
  VertexSet union_all() const;

  /// Members no other member is strictly contained in (resp. contains).
  std::vector<VertexSet> minimal_members() const;
  std::vector<VertexSet> maximal_members() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  FamilyKind kind_;
  std::size_t universe_;
  std::vector<std::uint64_t> masks_;
};

std::uint64_t to_mask(const VertexSet& s);
VertexSet from_mask(std::size_t universe, std::uint64_t mask);

/// Branch and bound on the highest-degree vertex, clique-cover upper bound.
std::size_t oracle_alpha(const Graph& g, const OracleLimits& limits = {});

SetFamily oracle_omega(const Graph& g, const OracleLimits& limits = {},
                       EnumerationOrder order = EnumerationOrder::kAscending);

struct CriticalIndependentFamily {
  std::size_t idc = 0;
  SetFamily family;
};

/// All independent I with d(I) = id_c(G).
CriticalIndependentFamily oracle_critical_independent_family(
    const Graph& g, const OracleLimits& limits = {},
    EnumerationOrder order = EnumerationOrder::kAscending);

/// max d(X) over all 2^n subsets.
std::size_t oracle_dc(const Graph& g, const OracleLimits& limits = {});

struct CriticalFamily {
  std::size_t dc = 0;
  SetFamily family;
};

/// Every subset X (independent or not) with d(X) = d_c(G).
CriticalFamily oracle_critical_sets(const Graph& g, const OracleLimits& limits = {});

struct SideCriticalFamily {
  std::size_t delta0 = 0;
  SetFamily family;
};

/// All X within `side` with d(X) = delta0(side).
SideCriticalFamily oracle_side_critical_family(const Graph& g, const Bipartition& bp, Side side,
                                               const OracleLimits& limits = {});

/// Exact matching number of any graph, by exhaustive recursion.
std::size_t oracle_mu(const Graph& g, const OracleLimits& limits = {});

}  // namespace critset

#endif  // CRITSET_ORACLE_HPP_
