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

// critset command-line interface.
//
// Exit codes: 0 success, 1 usage or input error, 2 check failure or
// counterexample.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "critset/analysis.hpp"
#include "critset/critical.hpp"
#include "critset/format.hpp"
#include "critset/random.hpp"
#include "critset/verify.hpp"

namespace {

using namespace critset;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheck = 2;

struct Common {
  std::optional<std::size_t> bound;
  bool json = false;

  OracleLimits limits() const {
    OracleLimits l = OracleLimits::from_environment();
    return bound ? l.with_order_bound(*bound) : l;
  }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--bound", c.bound, "Oracle order bound (overrides CRITSET_ORACLE_BOUND)")
      ->check(CLI::Range(1, 64));
  app->add_flag("--json", c.json, "JSON output");
}

struct GenOptions {
  std::string kind = "general";
  std::size_t n = 0;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  double p = 0.5;

  GeneratorParams params() const {
    GeneratorParams g;
    if (kind == "bipartite") {
      g.kind = GraphKind::kBipartite;
    } else if (kind == "general") {
      g.kind = GraphKind::kGeneral;
    } else {
      throw std::invalid_argument("--kind must be bipartite or general");
    }
    g.n = n;
    g.n_a = n_a;
    g.n_b = n_b;
    g.p = p;
    g.validate();
    return g;
  }
};

void add_generator(CLI::App* app, GenOptions& g) {
  app->add_option("--kind", g.kind, "bipartite or general")->check(CLI::IsMember({"bipartite", "general"}));
  app->add_option("--n", g.n, "Order (general)");
  app->add_option("--nA", g.n_a, "Side A size (bipartite)");
  app->add_option("--nB", g.n_b, "Side B size (bipartite)");
  app->add_option("--p", g.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int refuse_bound(const OracleBoundError& e) {
  std::cerr << "critset: refusing: " << e.what() << "; rerun with --bound N or set " << kOracleBoundEnv << '\n';
  return kExitUsage;
}

struct BenchRow {
  std::size_t n_a;
  std::size_t n_b;
  std::size_t m;
  double matching_ms;
  double pipeline_ms;
};

double best_of(std::size_t repeat, const std::function<void()>& f) {
  double best = 1e300;
  for (std::size_t i = 0; i < repeat; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

BenchRow bench_once(std::size_t n_a, std::size_t n_b, double deg, std::uint64_t seed, std::size_t repeat) {
  const RandomGraph rg = random_bipartite_by_degree(n_a, n_b, deg, seed);
  const Bipartition bp = Bipartition::from_side_a(rg.graph, *rg.side_a);
  BenchRow row{n_a, n_b, rg.graph.size(), 0, 0};
  volatile std::size_t sink = 0;
  row.matching_ms = best_of(repeat, [&] { sink = max_matching(rg.graph, bp).size(); });
  row.pipeline_ms = best_of(repeat, [&] { sink = summarize(rg.graph, bp).core.size(); });
  return row;
}

std::string bench_table(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(10) << "nA" << std::setw(10) << "nB" << std::setw(12) << "edges" << std::setw(14)
     << "matching_ms" << std::setw(14) << "pipeline_ms" << "growth\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << std::left << std::setw(10) << r.n_a << std::setw(10) << r.n_b << std::setw(12) << r.m << std::fixed
       << std::setprecision(2) << std::setw(14) << r.matching_ms << std::setw(14) << r.pipeline_ms;
    if (i > 0 && rows[i - 1].pipeline_ms > 0) {
      os << std::setprecision(2) << r.pipeline_ms / rows[i - 1].pipeline_ms << "x";
    } else {
      os << "-";
    }
    os << '\n';
    os.unsetf(std::ios::fixed);
  }
  if (rows.size() > 1) {
    os << "growth is the pipeline time ratio per doubling; 4x would be quadratic\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical sets, ker, diadem, core and corona of graphs"};
  app.require_subcommand(1);

  Common common;
  std::string file;
  std::string out_path;

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "Invariants and sets of a graph file");
  bool with_verify = false;
  bool with_oracle = false;
  bool with_timing = false;
  bool parallel = false;
  analyze_cmd->add_option("file", file, "Graph file")->required();
  analyze_cmd->add_flag("--verify", with_verify, "Append the identity checks");
  analyze_cmd->add_flag("--oracle", with_oracle, "Cross-check bipartite results against the oracle");
  analyze_cmd->add_flag("--timing", with_timing, "Report phase timings");
  analyze_cmd->add_flag("--parallel", parallel, "Evaluate the two sides concurrently");
  add_common(analyze_cmd, common);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run the identity checks on a graph file");
  std::vector<std::string> only;
  verify_cmd->add_option("file", file, "Graph file")->required();
  verify_cmd->add_option("--only", only, "Run only these check ids")->delimiter(',');
  add_common(verify_cmd, common);

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive computation for a small graph file");
  oracle_cmd->add_option("file", file, "Graph file")->required();
  add_common(oracle_cmd, common);

  // generate
  auto* generate_cmd = app.add_subcommand("generate", "Seeded random graph document");
  GenOptions gen;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  add_generator(generate_cmd, gen);
  generate_cmd->add_option("--seed", seed, "RNG seed")->required();
  generate_cmd->add_option("--index", index, "Instance index within the seed's stream");
  generate_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");

  // search
  auto* search_cmd = app.add_subcommand("search", "Slack search over seeded random graphs");
  std::uint64_t count = 0;
  std::size_t workers = 1;
  add_generator(search_cmd, gen);
  search_cmd->add_option("--seed", seed, "RNG seed")->required();
  search_cmd->add_option("--count", count, "Number of instances")->required();
  search_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1, 1024));
  add_common(search_cmd, common);

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Time matching and the bipartite pipeline");
  std::size_t bench_a = 50000;
  std::size_t bench_b = 50000;
  double avg_deg = 10.0;
  std::size_t sweep = 1;
  std::size_t repeat = 1;
  std::uint64_t bench_seed = 1;
  bench_cmd->add_option("--nA", bench_a, "Side A size (first row)");
  bench_cmd->add_option("--nB", bench_b, "Side B size (first row)");
  bench_cmd->add_option("--avg-deg", avg_deg, "Average degree");
  bench_cmd->add_option("--sweep", sweep, "Number of rows, doubling both sides each row")->check(CLI::Range(1, 20));
  bench_cmd->add_option("--repeat", repeat, "Runs per row; the best is reported")->check(CLI::Range(1, 100));
  bench_cmd->add_option("--seed", bench_seed, "RNG seed");

  // checks
  auto* checks_cmd = app.add_subcommand("checks", "List the identity checks");
  checks_cmd->add_flag("--json", common.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze_cmd->parsed() || oracle_cmd->parsed()) {
      const GraphDocument doc = load_graph(file);
      AnalyzeOptions opt;
      opt.limits = common.limits();
      opt.method = oracle_cmd->parsed() ? AnalysisMethod::kOracle : AnalysisMethod::kAuto;
      opt.cross_check = with_oracle;
      opt.verify = with_verify;
      opt.timing = with_timing;
      opt.execution = parallel ? Execution::kParallel : Execution::kSequential;
      const AnalysisReport r = analyze(doc, opt);
      std::cout << (common.json ? render_json(r, with_timing) : render_text(r, with_timing));
      return r.exit_code();
    }
    if (verify_cmd->parsed()) {
      const GraphDocument doc = load_graph(file);
      BatteryOptions opt;
      opt.limits = common.limits();
      opt.names = doc.names;
      opt.only = only;
      const TheoremReport t = theorem_battery(doc.graph(), doc.name, opt, doc.declared_bipartition());
      std::cout << (common.json ? render_json(t) : render_text(t));
      return t.violations() > 0 ? kExitCheck : kExitOk;
    }
    if (generate_cmd->parsed()) {
      write_output(render_graph(generate(gen.params(), seed, index)), out_path);
      return kExitOk;
    }
    if (search_cmd->parsed()) {
      SearchParams p;
      p.generator = gen.params();
      p.seed = seed;
      p.count = count;
      p.workers = workers;
      p.limits = common.limits();
      const SearchReport r = conjecture_search(p);
      std::cout << (common.json ? render_json(r) : render_text(r));
      return r.clean() ? kExitOk : kExitCheck;
    }
    if (bench_cmd->parsed()) {
      std::vector<BenchRow> rows;
      for (std::size_t i = 0; i < sweep; ++i) {
        rows.push_back(bench_once(bench_a << i, bench_b << i, avg_deg, bench_seed, repeat));
      }
      std::cout << bench_table(rows);
      return kExitOk;
    }
    if (checks_cmd->parsed()) {
      std::cout << (common.json ? render_catalog_json() : render_catalog_text());
      return kExitOk;
    }
  } catch (const OracleBoundError& e) {
    return refuse_bound(e);
  } catch (const ParseError& e) {
    std::cerr << "critset: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "critset: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
