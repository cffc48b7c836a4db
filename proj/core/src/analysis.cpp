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

#include "critset/analysis.hpp"

#include <charconv>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <variant>

#include "json.hpp"

namespace critset {

using nlohmann::ordered_json;

const VertexSet* AnalysisReport::find_set(const std::string& label) const {
  for (const auto& s : sets) {
    if (s.label == label) return &s.set;
  }
  return nullptr;
}

int AnalysisReport::exit_code() const {
  if (theorems && theorems->violations() > 0) return 2;
  if (oracle_mismatches && !oracle_mismatches->empty()) return 2;
  return 0;
}

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(std::vector<std::pair<std::string, double>>& out) : out_(out) {}
  void lap(const char* phase) {
    const auto now = std::chrono::steady_clock::now();
    out_.emplace_back(phase, std::chrono::duration<double, std::milli>(now - last_).count());
    last_ = now;
  }

 private:
  std::vector<std::pair<std::string, double>>& out_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

/// Everything the oracle can say about a graph, for analysis or comparison.
struct OracleValues {
  InvariantBundle bundle;
  std::vector<NamedSet> sets;
};

OracleValues oracle_values(const Graph& g, const Bipartition* bp, const OracleLimits& limits) {
  OracleValues out;
  auto& b = out.bundle;
  b.alpha = oracle_alpha(g, limits);
  b.mu = oracle_mu(g, limits);
  const auto cif = oracle_critical_independent_family(g, limits);
  const auto omega = oracle_omega(g, limits);
  b.idc = cif.idc;
  b.dc = g.order() <= limits.max_subset_order ? oracle_dc(g, limits) : cif.idc;
  if (bp) {
    const auto fa = oracle_side_critical_family(g, *bp, Side::A, limits);
    const auto fb = oracle_side_critical_family(g, *bp, Side::B, limits);
    b.delta0_a = fa.delta0;
    b.delta0_b = fb.delta0;
    out.sets.push_back({"ker_A", fa.family.intersection()});
    out.sets.push_back({"ker_B", fb.family.intersection()});
    out.sets.push_back({"diadem_A", fa.family.union_all()});
    out.sets.push_back({"diadem_B", fb.family.union_all()});
  }
  out.sets.push_back({"ker", cif.family.intersection()});
  out.sets.push_back({"diadem", cif.family.union_all()});
  out.sets.push_back({"core", omega.intersection()});
  out.sets.push_back({"corona", omega.union_all()});
  return out;
}

}  // namespace

AnalysisReport analyze(const GraphDocument& doc, const AnalyzeOptions& options) {
  AnalysisReport r;
  Stopwatch clock(r.timing_ms);
  r.graph_id = doc.name;
  r.names = doc.names;
  const Graph g = doc.graph();
  r.order = g.order();
  r.size = g.size();

  std::optional<Bipartition> bp = doc.declared_bipartition();
  if (!bp) {
    auto found = find_bipartition(g);
    if (auto* b = std::get_if<Bipartition>(&found)) {
      bp = std::move(*b);
    } else {
      r.odd_cycle = std::get<OddCycle>(found).vertices;
    }
  }
  r.bipartite = bp.has_value();
  if (bp) {
    r.side_a_size = bp->side(Side::A).size();
    r.side_b_size = bp->side(Side::B).size();
  }
  clock.lap("parse-and-colour");

  if (options.method == AnalysisMethod::kAuto && bp) {
    r.method = "alternating-paths";
    const CriticalSummary s = summarize(g, *bp, options.execution);
    r.bundle = s.bundle;
    r.konig_egervary = true;
    r.sets = {{"ker_A", s.ker_a},   {"ker_B", s.ker_b}, {"diadem_A", s.diadem_a}, {"diadem_B", s.diadem_b},
              {"ker", s.ker},       {"diadem", s.diadem}, {"core", s.core},       {"corona", s.corona}};
    clock.lap("matching-and-sets");
    if (options.cross_check) {
      const OracleValues o = oracle_values(g, &*bp, options.limits);
      std::vector<std::string> mismatches;
      auto cmp = [&](const char* what, std::size_t mine, std::size_t theirs) {
        if (mine != theirs) {
          mismatches.push_back(std::string(what) + ": " + std::to_string(mine) + " vs oracle " + std::to_string(theirs));
        }
      };
      cmp("mu", r.bundle.mu, o.bundle.mu);
      cmp("alpha", r.bundle.alpha, o.bundle.alpha);
      cmp("d_c", r.bundle.dc, o.bundle.dc);
      cmp("id_c", r.bundle.idc, o.bundle.idc);
      cmp("delta0(A)", *r.bundle.delta0_a, *o.bundle.delta0_a);
      cmp("delta0(B)", *r.bundle.delta0_b, *o.bundle.delta0_b);
      for (const auto& theirs : o.sets) {
        const VertexSet* mine = r.find_set(theirs.label);
        if (mine && *mine != theirs.set) {
          mismatches.push_back(theirs.label + ": " + format_set(*mine, r.names) + " vs oracle " +
                               format_set(theirs.set, r.names));
        }
      }
      r.oracle_mismatches = std::move(mismatches);
      clock.lap("oracle-cross-check");
    }
  } else {
    r.method = "oracle";
    OracleValues o = oracle_values(g, bp ? &*bp : nullptr, options.limits);
    r.bundle = o.bundle;
    r.sets = std::move(o.sets);
    r.konig_egervary = r.bundle.alpha + r.bundle.mu == r.order;
    clock.lap("oracle");
  }

  if (options.verify) {
    BatteryOptions battery = options.battery;
    battery.limits = options.limits;
    battery.names = r.names;
    r.theorems = theorem_battery(g, r.graph_id, battery, bp);
    clock.lap("theorems");
  }
  return r;
}

// ---- rendering ------------------------------------------------------------

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

ordered_json vertex_json(VertexId v, const std::vector<std::string>& names) {
  if (names.empty()) return v;
  return names[v];
}

ordered_json set_json(const VertexSet& s, const std::vector<std::string>& names) {
  ordered_json arr = ordered_json::array();
  s.for_each([&](VertexId v) { arr.push_back(vertex_json(v, names)); });
  return arr;
}

std::string fmt_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string status_label(const CheckResult& r) {
  switch (r.status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kSkipped: return "skipped";
    case CheckStatus::kFail: return r.hypothesis_met ? "FAIL" : "fail*";
  }
  return "?";
}

std::string theorem_summary(const TheoremReport& t) {
  std::ostringstream os;
  os << t.count(CheckStatus::kPass) << " pass, " << t.count(CheckStatus::kFail) << " fail, "
     << t.count(CheckStatus::kSkipped) << " skipped, " << t.violations() << " violations";
  return os.str();
}

void theorem_lines(std::ostringstream& os, const TheoremReport& t) {
  std::size_t width = 0;
  for (const auto& c : t.checks) width = std::max(width, c.id.size());
  bool any_unmet = false;
  for (const auto& c : t.checks) {
    os << "  " << std::left << std::setw(8) << status_label(c) << std::setw(static_cast<int>(width) + 2) << c.id
       << c.detail << '\n';
    any_unmet = any_unmet || (c.status == CheckStatus::kFail && !c.hypothesis_met);
  }
  if (any_unmet) os << "  * fails outside the class the identity is stated for; not a violation\n";
}

ordered_json theorem_json(const TheoremReport& t) {
  ordered_json j;
  j["graph"] = t.graph_id;
  j["pass"] = t.count(CheckStatus::kPass);
  j["fail"] = t.count(CheckStatus::kFail);
  j["skipped"] = t.count(CheckStatus::kSkipped);
  j["violations"] = t.violations();
  ordered_json arr = ordered_json::array();
  for (const auto& c : t.checks) {
    ordered_json cj;
    cj["id"] = c.id;
    cj["scope"] = check_scope_name(c.scope);
    cj["status"] = check_status_name(c.status);
    cj["hypothesis_met"] = c.hypothesis_met;
    cj["statement"] = c.statement;
    cj["detail"] = c.detail;
    arr.push_back(std::move(cj));
  }
  j["checks"] = std::move(arr);
  return j;
}

std::string optional_text(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "n/a"; }

}  // namespace

std::string render_text(const AnalysisReport& r, bool with_timing) {
  std::ostringstream os;
  os << "graph: " << r.graph_id << '\n';
  os << "order: " << r.order << '\n';
  os << "size: " << r.size << '\n';
  os << "bipartite: " << yes_no(r.bipartite) << '\n';
  if (r.side_a_size) os << "side A size: " << *r.side_a_size << '\n';
  if (r.side_b_size) os << "side B size: " << *r.side_b_size << '\n';
  if (r.odd_cycle) {
    os << "odd cycle:";
    for (VertexId v : *r.odd_cycle) os << ' ' << (r.names.empty() ? std::to_string(v) : r.names[v]);
    os << '\n';
  }
  os << "method: " << r.method << '\n';
  os << "konig-egervary: " << (r.konig_egervary ? yes_no(*r.konig_egervary) : "unknown") << '\n';
  os << "mu: " << r.bundle.mu << '\n';
  os << "alpha: " << r.bundle.alpha << '\n';
  os << "d_c: " << r.bundle.dc << '\n';
  os << "id_c: " << r.bundle.idc << '\n';
  os << "delta0(A): " << optional_text(r.bundle.delta0_a) << '\n';
  os << "delta0(B): " << optional_text(r.bundle.delta0_b) << '\n';
  for (const auto& s : r.sets) os << s.label << ": " << format_set(s.set, r.names) << '\n';
  if (r.oracle_mismatches) {
    os << "oracle cross-check: " << (r.oracle_mismatches->empty() ? "agree" : "DISAGREE") << '\n';
    for (const auto& m : *r.oracle_mismatches) os << "  " << m << '\n';
  }
  if (r.theorems) {
    os << "checks: " << theorem_summary(*r.theorems) << '\n';
    theorem_lines(os, *r.theorems);
  }
  if (with_timing) {
    for (const auto& [phase, ms] : r.timing_ms) os << "time " << phase << ": " << fmt_double(ms) << " ms\n";
  }
  return os.str();
}

std::string render_json(const AnalysisReport& r, bool with_timing) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["graph"] = r.graph_id;
  j["order"] = r.order;
  j["size"] = r.size;
  j["bipartite"] = r.bipartite;
  if (r.side_a_size) j["side_a_size"] = *r.side_a_size;
  if (r.side_b_size) j["side_b_size"] = *r.side_b_size;
  if (r.odd_cycle) {
    ordered_json c = ordered_json::array();
    for (VertexId v : *r.odd_cycle) c.push_back(vertex_json(v, r.names));
    j["odd_cycle"] = std::move(c);
  }
  j["method"] = r.method;
  j["konig_egervary"] = r.konig_egervary ? ordered_json(*r.konig_egervary) : ordered_json(nullptr);
  ordered_json inv;
  inv["mu"] = r.bundle.mu;
  inv["alpha"] = r.bundle.alpha;
  inv["d_c"] = r.bundle.dc;
  inv["id_c"] = r.bundle.idc;
  inv["delta0_a"] = r.bundle.delta0_a ? ordered_json(*r.bundle.delta0_a) : ordered_json(nullptr);
  inv["delta0_b"] = r.bundle.delta0_b ? ordered_json(*r.bundle.delta0_b) : ordered_json(nullptr);
  j["invariants"] = std::move(inv);
  ordered_json sets;
  for (const auto& s : r.sets) sets[s.label] = set_json(s.set, r.names);
  j["sets"] = std::move(sets);
  if (r.oracle_mismatches) {
    j["oracle_cross_check"] = {{"agree", r.oracle_mismatches->empty()}, {"mismatches", *r.oracle_mismatches}};
  }
  if (r.theorems) j["checks"] = theorem_json(*r.theorems);
  if (with_timing) {
    ordered_json t;
    for (const auto& [phase, ms] : r.timing_ms) t[phase] = ms;
    j["timing_ms"] = std::move(t);
  }
  return j.dump(2) + "\n";
}

std::string render_text(const TheoremReport& t) {
  std::ostringstream os;
  os << "checks for " << t.graph_id << ": " << theorem_summary(t) << '\n';
  theorem_lines(os, t);
  return os.str();
}

std::string render_json(const TheoremReport& t) {
  ordered_json j;
  j["schema"] = kReportSchema;
  const ordered_json body = theorem_json(t);
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  return j.dump(2) + "\n";
}

namespace {

std::string search_params_text(const SearchParams& p) {
  std::ostringstream os;
  os << "kind=" << graph_kind_name(p.generator.kind);
  if (p.generator.kind == GraphKind::kBipartite) {
    os << " nA=" << p.generator.n_a << " nB=" << p.generator.n_b;
  } else {
    os << " n=" << p.generator.n;
  }
  os << " p=" << fmt_double(p.generator.p) << " seed=" << p.seed << " count=" << p.count;
  return os.str();
}

GraphDocument counterexample_document(const SearchReport& r, const Counterexample& c) {
  return document_from_graph("search-seed" + std::to_string(r.params.seed) + "-i" + std::to_string(c.index),
                             c.instance.graph, c.instance.side_a);
}

std::string optional_slack(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "none"; }

}  // namespace

std::string render_text(const SearchReport& r) {
  std::ostringstream os;
  os << "search: " << search_params_text(r.params) << '\n';
  os << "graphs tested: " << r.graphs_tested << '\n';
  os << "bipartite instances: " << r.bipartite_instances << '\n';
  os << "min slack: " << optional_slack(r.min_slack) << '\n';
  os << "max slack: " << optional_slack(r.max_slack) << '\n';
  os << "zero-slack instances: " << r.zero_slack_instances << '\n';
  os << "counterexamples: " << r.counterexamples.size() << '\n';
  os << "sandwich violations: " << r.sandwich_violations.size() << '\n';
  os << "oracle cross-checks: " << r.cross_checked << " (" << r.cross_check_failures.size() << " disagreements)\n";
  for (auto i : r.sandwich_violations) os << "  sandwich violation at index " << i << '\n';
  for (auto i : r.cross_check_failures) os << "  cross-check disagreement at index " << i << '\n';
  for (const auto& c : r.counterexamples) {
    os << "counterexample index=" << c.index << " slack=" << c.slack << '\n';
    os << render_graph(counterexample_document(r, c));
  }
  return os.str();
}

std::string render_json(const SearchReport& r) {
  ordered_json j;
  j["schema"] = kReportSchema;
  ordered_json p;
  p["kind"] = graph_kind_name(r.params.generator.kind);
  if (r.params.generator.kind == GraphKind::kBipartite) {
    p["nA"] = r.params.generator.n_a;
    p["nB"] = r.params.generator.n_b;
  } else {
    p["n"] = r.params.generator.n;
  }
  p["p"] = r.params.generator.p;
  p["seed"] = r.params.seed;
  p["count"] = r.params.count;
  j["params"] = std::move(p);
  j["graphs_tested"] = r.graphs_tested;
  j["bipartite_instances"] = r.bipartite_instances;
  j["min_slack"] = r.min_slack ? ordered_json(*r.min_slack) : ordered_json(nullptr);
  j["max_slack"] = r.max_slack ? ordered_json(*r.max_slack) : ordered_json(nullptr);
  j["zero_slack_instances"] = r.zero_slack_instances;
  ordered_json ces = ordered_json::array();
  for (const auto& c : r.counterexamples) {
    ces.push_back({{"index", c.index}, {"slack", c.slack}, {"graph", render_graph(counterexample_document(r, c))}});
  }
  j["counterexamples"] = std::move(ces);
  j["sandwich_violations"] = r.sandwich_violations;
  j["cross_checked"] = r.cross_checked;
  j["cross_check_failures"] = r.cross_check_failures;
  return j.dump(2) + "\n";
}

std::string render_catalog_text() {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& c : check_catalog()) width = std::max(width, c.id.size());
  for (const auto& c : check_catalog()) {
    os << std::left << std::setw(static_cast<int>(width) + 2) << std::string(c.id) << std::setw(16)
       << check_scope_name(c.scope) << c.statement << '\n';
  }
  return os.str();
}

std::string render_catalog_json() {
  ordered_json arr = ordered_json::array();
  for (const auto& c : check_catalog()) {
    arr.push_back({{"id", std::string(c.id)}, {"scope", check_scope_name(c.scope)}, {"statement", std::string(c.statement)}});
  }
  ordered_json j;
  j["schema"] = kReportSchema;
  j["checks"] = std::move(arr);
  return j.dump(2) + "\n";
}

}  // namespace critset
