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


#include <benchmark/benchmark.h>

#include <string>

#include "critset/analysis.hpp"
#include "critset/critical.hpp"
#include "critset/format.hpp"
#include "critset/matching.hpp"
#include "critset/oracle.hpp"
#include "critset/random.hpp"
#include "critset/verify.hpp"

namespace {

using namespace critset;

struct Bip {
  RandomGraph rg;
  Bipartition bp;
};

Bip make(std::size_t side) {
  RandomGraph rg = random_bipartite_by_degree(side, side, 10.0, 1);
  Bipartition bp = Bipartition::from_side_a(rg.graph, *rg.side_a);
  return {std::move(rg), std::move(bp)};
}

void BM_MaxMatching(benchmark::State& state) {
  const Bip b = make(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_matching(b.rg.graph, b.bp).size());
  state.SetComplexityN(static_cast<std::int64_t>(b.rg.graph.order() + b.rg.graph.size()));
}
BENCHMARK(BM_MaxMatching)->RangeMultiplier(2)->Range(1 << 12, 1 << 16)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Summarize(benchmark::State& state) {
  const Bip b = make(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(summarize(b.rg.graph, b.bp).core.size());
  state.SetComplexityN(static_cast<std::int64_t>(b.rg.graph.order() + b.rg.graph.size()));
}
BENCHMARK(BM_Summarize)->RangeMultiplier(2)->Range(1 << 12, 1 << 16)->Unit(benchmark::kMillisecond)->Complexity();

void BM_SummarizeParallel(benchmark::State& state) {
  const Bip b = make(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(summarize(b.rg.graph, b.bp, Execution::kParallel).core.size());
}
BENCHMARK(BM_SummarizeParallel)->Arg(50000)->Unit(benchmark::kMillisecond);

Graph general(std::size_t n, double p) {
  GeneratorParams g;
  g.n = n;
  g.p = p;
  return random_graph(g, 3).graph;
}

void BM_OracleAlpha(benchmark::State& state) {
  const Graph g = general(static_cast<std::size_t>(state.range(0)), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_alpha(g));
}
BENCHMARK(BM_OracleAlpha)->DenseRange(12, 24, 4);

void BM_OracleCriticalIndependent(benchmark::State& state) {
  const Graph g = general(static_cast<std::size_t>(state.range(0)), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_critical_independent_family(g).idc);
}
BENCHMARK(BM_OracleCriticalIndependent)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_OracleDc(benchmark::State& state) {
  const Graph g = general(static_cast<std::size_t>(state.range(0)), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_dc(g));
}
BENCHMARK(BM_OracleDc)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_BatteryFig2(benchmark::State& state) {
  const GraphDocument doc = load_graph(std::string(CRITSET_FIXTURE_DIR) + "/fig2.graph");
  const Graph g = doc.graph();
  const auto bp = doc.declared_bipartition();
  for (auto _ : state) benchmark::DoNotOptimize(theorem_battery(g, doc.name, {}, bp).violations());
}
BENCHMARK(BM_BatteryFig2)->Unit(benchmark::kMillisecond);

void BM_SearchGeneral8(benchmark::State& state) {
  SearchParams p;
  p.generator.n = 8;
  p.generator.p = 0.3;
  p.seed = 42;
  p.count = 100;
  for (auto _ : state) benchmark::DoNotOptimize(conjecture_search(p).graphs_tested);
}
BENCHMARK(BM_SearchGeneral8)->Unit(benchmark::kMillisecond);

void BM_ParseRender(benchmark::State& state) {
  GeneratorParams p;
  p.kind = GraphKind::kBipartite;
  p.n_a = 2000;
  p.n_b = 2000;
  p.p = 0.005;
  const std::string text = render_graph(generate(p, 1));
  for (auto _ : state) benchmark::DoNotOptimize(render_graph(parse_graph(text)).size());
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseRender)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
