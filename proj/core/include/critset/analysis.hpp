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

// Whole-graph analysis and its text / JSON renderings.
//
// JSON reports carry "schema": 1. Sets are arrays of vertex names in
// ascending id order. The text rendering is one "key: value" line per field,
// with the same values.

#ifndef CRITSET_ANALYSIS_HPP_
#define CRITSET_ANALYSIS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "critset/critical.hpp"
#include "critset/format.hpp"
#include "critset/oracle.hpp"
#include "critset/verify.hpp"

namespace critset {

inline constexpr int kReportSchema = 1;

enum class AnalysisMethod : std::uint8_t {
  kAuto,    // alternating paths when 2-colourable, oracle otherwise
  kOracle,  // oracle only, for any graph
};

struct AnalyzeOptions {
  AnalysisMethod method = AnalysisMethod::kAuto;
  /// Also run the oracle and compare (bipartite inputs under kAuto).
  bool cross_check = false;
  bool verify = false;
  bool timing = false;
  Execution execution = Execution::kSequential;
  OracleLimits limits;
  BatteryOptions battery;  // names and limits are filled in by analyze()
};

struct NamedSet {
  std::string label;
  VertexSet set;
};

struct AnalysisReport {
  std::string graph_id;
  std::size_t order = 0;
  std::size_t size = 0;
  bool bipartite = false;
  std::optional<std::size_t> side_a_size;
  std::optional<std::size_t> side_b_size;
  std::optional<std::vector<VertexId>> odd_cycle;
  std::string method;  // "alternating-paths" or "oracle"
  std::optional<bool> konig_egervary;
  InvariantBundle bundle;
  /// ker_A, ker_B, diadem_A, diadem_B (bipartite), ker, diadem, core, corona.
  std::vector<NamedSet> sets;
  /// Present with cross_check: disagreements between the two methods.
  std::optional<std::vector<std::string>> oracle_mismatches;
  std::optional<TheoremReport> theorems;
  /// Milliseconds per phase; rendered only when requested.
  std::vector<std::pair<std::string, double>> timing_ms;
  std::vector<std::string> names;

  const VertexSet* find_set(const std::string& label) const;
  /// 2 on a check violation or an oracle disagreement, otherwise 0.
  int exit_code() const;
};

/// Throws OracleBoundError when the oracle is needed beyond its bound.
AnalysisReport analyze(const GraphDocument& doc, const AnalyzeOptions& options = {});

std::string render_text(const AnalysisReport& report, bool with_timing = false);
std::string render_json(const AnalysisReport& report, bool with_timing = false);

std::string render_text(const TheoremReport& report);
std::string render_json(const TheoremReport& report);

/// Counterexamples are embedded in the graph document format.
std::string render_text(const SearchReport& report);
std::string render_json(const SearchReport& report);

std::string render_catalog_text();
std::string render_catalog_json();

}  // namespace critset

#endif  // CRITSET_ANALYSIS_HPP_
