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

// Identity checks, the alternating closure on maximum independent sets, and
// the slack search.
//
// A check is a row in check_catalog(): id, the identity it tests, and the
// class of graphs it is stated for. theorem_battery() runs every row (or a
// filtered subset) and reports each one exactly once. Rows that cannot run
// because an oracle bound is exceeded are reported as skipped together with
// the bound.

#ifndef CRITSET_VERIFY_HPP_
#define CRITSET_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "critset/critical.hpp"
#include "critset/graph.hpp"
#include "critset/matching.hpp"
#include "critset/oracle.hpp"
#include "critset/random.hpp"

namespace critset {

enum class CheckScope : std::uint8_t {
  kBipartite,       // stated for bipartite graphs
  kKonigEgervary,   // stated for alpha + mu = n
  kAnyGraph,
};

const char* check_scope_name(CheckScope scope);

enum class CheckStatus : std::uint8_t { kPass, kFail, kSkipped };

const char* check_status_name(CheckStatus status);

struct CheckInfo {
  std::string_view id;
  std::string_view statement;
  CheckScope scope;
};

/// Every check in execution order.
std::span<const CheckInfo> check_catalog();

struct CheckResult {
  std::string id;
  std::string statement;
  CheckScope scope = CheckScope::kAnyGraph;
  CheckStatus status = CheckStatus::kSkipped;
  /// False when the graph lies outside the class the identity is stated
  /// for. Such a check still runs when it can, and a failure is then
  /// expected rather than a violation.
  bool hypothesis_met = true;
  /// Values compared on pass, the offending set or value on failure, the
  /// reason on skip. Never empty.
  std::string detail;

  bool is_violation() const { return status == CheckStatus::kFail && hypothesis_met; }
};

struct TheoremReport {
  std::string graph_id;
  std::vector<CheckResult> checks;

  std::size_t count(CheckStatus status) const;
  std::size_t violations() const;
  const CheckResult* find(std::string_view id) const;
};

struct BatteryOptions {
  OracleLimits limits;
  /// Cap on set pairs (or members) examined per family-based check.
  std::size_t max_pairs = 4096;
  /// Supermodularity runs over all subset pairs up to this order, sampled
  /// pairs beyond it.
  std::size_t exhaustive_supermodular_order = 10;
  /// Largest order for the per-vertex deletion route to core and corona.
  std::size_t deletion_bound = 4096;
  std::uint64_t sample_seed = 0;
  /// Optional display names, indexed by vertex id.
  std::span<const std::string> names;
  /// Run only these check ids (all when empty). Unknown ids throw
  /// std::invalid_argument.
  std::vector<std::string> only;
};

/// Runs the battery. The bipartition is found by 2-colouring unless one is
/// declared.
TheoremReport theorem_battery(const Graph& g, std::string graph_id,
                              const BatteryOptions& options = {},
                              const std::optional<Bipartition>& declared = std::nullopt);

/// Renders {a,b,c} in ascending id order, with names when provided.
std::string format_set(const VertexSet& s, std::span<const std::string> names = {});

// ---- alternating closure --------------------------------------------------

/// A documented precondition does not hold. what() names the clause.
class PreconditionError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// X1 = X | M((N(X) & S) - M(X)).
///
/// Requires: m a perfect matching of g, s a maximum independent set, x
/// independent and disjoint from s, G[x | M(x)] connected. The result is
/// checked to be independent with G[X1 | M(X1)] connected; a breach throws
/// std::logic_error.
VertexSet lemma_expand(const Graph& g, const Bipartition& bp, const Matching& m,
                       const VertexSet& s, const VertexSet& x);

struct ClosureResult {
  VertexSet closure;  // fixed point of Z <- Z | M((N(Z) & s) - M(Z))
  VertexSet new_mis;  // (s - M(closure)) | closure
};

/// Requires: s a maximum independent set, z0 independent and disjoint from
/// s, m a maximum matching that matches every vertex outside s into s.
/// Throws PreconditionError when a requirement fails or when the closure
/// does not yield an independent set (possible when G[z0 | M(z0)] is not
/// connected).
ClosureResult alternating_closure(const Graph& g, const Bipartition& bp, const Matching& m,
                                  const VertexSet& s, const VertexSet& z0);

/// True iff the subgraph induced by s is connected (the empty set counts).
bool induces_connected(const Graph& g, const VertexSet& s);

// ---- slack search ---------------------------------------------------------

struct SearchParams {
  GeneratorParams generator;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
  std::size_t workers = 1;
  OracleLimits limits;

  /// Throws std::invalid_argument on a generator the search cannot handle
  /// exactly (general graphs beyond the oracle bound).
  void validate() const;
};

struct Counterexample {
  std::uint64_t index = 0;
  std::int64_t slack = 0;
  RandomGraph instance;
};

/// slack = 2 alpha - |ker| - |diadem| per instance.
struct SearchReport {
  SearchParams params;
  std::uint64_t graphs_tested = 0;
  std::uint64_t bipartite_instances = 0;
  std::uint64_t zero_slack_instances = 0;
  std::optional<std::int64_t> min_slack;  // empty when nothing was tested
  std::optional<std::int64_t> max_slack;
  std::vector<Counterexample> counterexamples;  // slack < 0, by index
  /// Instances with |core| + |corona| < 2 alpha.
  std::vector<std::uint64_t> sandwich_violations;
  /// Bipartite instances checked against the oracle, and the indices where
  /// the polynomial and oracle values disagreed.
  std::uint64_t cross_checked = 0;
  std::vector<std::uint64_t> cross_check_failures;

  bool clean() const {
    return counterexamples.empty() && sandwich_violations.empty() && cross_check_failures.empty();
  }
};

/// Instance i is random_graph(params.generator, params.seed, i). Workers take
/// indices round-robin; the report does not depend on the worker count.
SearchReport conjecture_search(const SearchParams& params);

}  // namespace critset

#endif  // CRITSET_VERIFY_HPP_
