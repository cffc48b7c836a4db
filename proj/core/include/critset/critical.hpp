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

// Critical-set invariants.
//
// For a bipartite graph G = (A, B, E) with a maximum matching M:
//
//   delta0(S)   = |S| - mu(G)                      for S in {A, B}
//   d_c(G)      = delta0(A) + delta0(B)
//   ker_S       = S & reach(S)                     (minimal S-critical set)
//   diadem_S    = S - reach(opposite(S))           (maximal S-critical set)
//   ker         = ker_A | ker_B   = core
//   diadem      = diadem_A | diadem_B = corona
//
// where reach(S) is alternating_reachable() from the free vertices of S.
// Everything is O(n + m) after the matching. General graphs go through the
// AlphaFn abstraction or the oracle.

#ifndef CRITSET_CRITICAL_HPP_
#define CRITSET_CRITICAL_HPP_

#include <cstddef>
#include <functional>
#include <optional>

#include "critset/graph.hpp"
#include "critset/matching.hpp"
#include "critset/oracle.hpp"

namespace critset {

struct InvariantBundle {
  std::size_t mu = 0;
  std::size_t alpha = 0;
  std::optional<std::size_t> delta0_a;  // bipartite only
  std::optional<std::size_t> delta0_b;
  std::size_t dc = 0;
  std::size_t idc = 0;

  friend bool operator==(const InvariantBundle&, const InvariantBundle&) = default;
};

struct CriticalSummary {
  VertexSet ker_a;
  VertexSet ker_b;
  VertexSet diadem_a;
  VertexSet diadem_b;
  VertexSet ker;
  VertexSet diadem;
  VertexSet core;
  VertexSet corona;
  InvariantBundle bundle;

  friend bool operator==(const CriticalSummary&, const CriticalSummary&) = default;
};

std::size_t delta0(const Graph& g, const Bipartition& bp, Side side);
std::size_t critical_difference(const Graph& g, const Bipartition& bp);

/// d_c of any graph: the bipartite formula when g is bipartite, otherwise
/// the all-subset oracle (bounded).
std::size_t critical_difference(const Graph& g, const OracleLimits& limits = {});

VertexSet ker_side(const Graph& g, const Bipartition& bp, const Matching& m, Side side);
VertexSet diadem_side(const Graph& g, const Bipartition& bp, const Matching& m, Side side);

VertexSet ker(const Graph& g, const Bipartition& bp);
VertexSet diadem(const Graph& g, const Bipartition& bp);

/// Bipartite core, which coincides with ker.
VertexSet core(const Graph& g, const Bipartition& bp);

/// Bipartite corona as V - N(core).
VertexSet corona(const Graph& g, const Bipartition& bp);

/// Exact independence number of a graph.
using AlphaFn = std::function<std::size_t(const Graph&)>;

/// n - mu via Hopcroft-Karp; throws NotBipartiteError on other graphs.
std::size_t konig_alpha(const Graph& g);

/// Oracle alpha bound to the given limits.
AlphaFn oracle_alpha_fn(OracleLimits limits = {});

/// {v : alpha(G - v) < alpha(G)}.
VertexSet core_by_deletion(const Graph& g, const AlphaFn& alpha);

/// {v : alpha(G - N[v]) = alpha(G) - 1}.
VertexSet corona(const Graph& g, const AlphaFn& alpha);

enum class Execution : std::uint8_t { kSequential, kParallel };

/// All bipartite invariants from one maximum matching. kParallel evaluates
/// the two sides concurrently; the result is identical either way.
CriticalSummary summarize(const Graph& g, const Bipartition& bp,
                          Execution execution = Execution::kSequential);

bool is_side_critical(const Graph& g, const Bipartition& bp, const VertexSet& x, Side side);
bool is_critical(const Graph& g, const VertexSet& x, const OracleLimits& limits = {});
bool is_critical_independent(const Graph& g, const VertexSet& x,
                             const OracleLimits& limits = {});

/// Outcome of the ker test: x = ker(G) iff for every v in x there is a
/// matching from N(x) into x - v.
struct KerCertificate {
  bool is_ker = false;
  /// On failure: a vertex whose removal admits no such matching, and a
  /// nonempty Y within N(x) with |N(Y) & x| = |Y|.
  std::optional<VertexId> removable;
  std::optional<VertexSet> witness;
};

class NotCriticalIndependentError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Throws NotCriticalIndependentError when x is not a critical independent set.
KerCertificate ker_certificate(const Graph& g, const VertexSet& x,
                               const OracleLimits& limits = {});

}  // namespace critset

#endif  // CRITSET_CRITICAL_HPP_
