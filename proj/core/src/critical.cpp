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

#include "critset/critical.hpp"

#include <future>
#include <utility>
#include <variant>

namespace critset {

std::size_t delta0(const Graph& g, const Bipartition& bp, Side side) {
  // delta0 of an empty side is 0; |side| >= mu always holds.
  return bp.side(side).size() - max_matching(g, bp).size();
}

std::size_t critical_difference(const Graph& g, const Bipartition& bp) {
  const std::size_t mu = max_matching(g, bp).size();
  return (bp.side(Side::A).size() - mu) + (bp.side(Side::B).size() - mu);
}

std::size_t critical_difference(const Graph& g, const OracleLimits& limits) {
  auto found = find_bipartition(g);
  if (const auto* bp = std::get_if<Bipartition>(&found)) return critical_difference(g, *bp);
  return oracle_dc(g, limits);
}

VertexSet ker_side(const Graph& g, const Bipartition& bp, const Matching& m, Side side) {
  return bp.side(side) & alternating_reachable(g, bp, m, side);
}

VertexSet diadem_side(const Graph& g, const Bipartition& bp, const Matching& m, Side side) {
  return bp.side(side) - alternating_reachable(g, bp, m, opposite(side));
}

VertexSet ker(const Graph& g, const Bipartition& bp) {
  const Matching m = max_matching(g, bp);
  return ker_side(g, bp, m, Side::A) | ker_side(g, bp, m, Side::B);
}

VertexSet diadem(const Graph& g, const Bipartition& bp) {
  const Matching m = max_matching(g, bp);
  return diadem_side(g, bp, m, Side::A) | diadem_side(g, bp, m, Side::B);
}

VertexSet core(const Graph& g, const Bipartition& bp) { return ker(g, bp); }

VertexSet corona(const Graph& g, const Bipartition& bp) {
  return neighborhood(g, core(g, bp)).complement();
}

std::size_t konig_alpha(const Graph& g) {
  const Bipartition bp = bipartition(g);
  return g.order() - max_matching(g, bp).size();
}

AlphaFn oracle_alpha_fn(OracleLimits limits) {
  return [limits](const Graph& h) { return oracle_alpha(h, limits); };
}

VertexSet core_by_deletion(const Graph& g, const AlphaFn& alpha) {
  const std::size_t whole = alpha(g);
  VertexSet out(g.order());
  for (VertexId v = 0; v < g.order(); ++v) {
    const InducedSubgraph rest = delete_vertices(g, VertexSet::from_ids(g.order(), {v}));
    if (alpha(rest.graph) < whole) out.insert(v);
  }
  return out;
}

VertexSet corona(const Graph& g, const AlphaFn& alpha) {
  const std::size_t whole = alpha(g);
  VertexSet out(g.order());
  for (VertexId v = 0; v < g.order(); ++v) {
    const VertexSet closed = closed_neighborhood(g, VertexSet::from_ids(g.order(), {v}));
    const InducedSubgraph rest = delete_vertices(g, closed);
    if (alpha(rest.graph) + 1 == whole) out.insert(v);
  }
  return out;
}

CriticalSummary summarize(const Graph& g, const Bipartition& bp, Execution execution) {
  const Matching m = max_matching(g, bp);
  VertexSet reach_a;
  VertexSet reach_b;
  if (execution == Execution::kParallel) {
    auto a = std::async(std::launch::async,
                        [&] { return alternating_reachable(g, bp, m, Side::A); });
    reach_b = alternating_reachable(g, bp, m, Side::B);
    reach_a = a.get();
  } else {
    reach_a = alternating_reachable(g, bp, m, Side::A);
    reach_b = alternating_reachable(g, bp, m, Side::B);
  }
  const VertexSet& side_a = bp.side(Side::A);
  const VertexSet& side_b = bp.side(Side::B);

  CriticalSummary s;
  s.ker_a = side_a & reach_a;
  s.ker_b = side_b & reach_b;
  s.diadem_a = side_a - reach_b;
  s.diadem_b = side_b - reach_a;
  s.ker = s.ker_a | s.ker_b;
  s.diadem = s.diadem_a | s.diadem_b;
  s.core = s.ker;
  s.corona = neighborhood(g, s.core).complement();

  InvariantBundle& b = s.bundle;
  b.mu = m.size();
  b.alpha = g.order() - b.mu;
  b.delta0_a = side_a.size() - b.mu;
  b.delta0_b = side_b.size() - b.mu;
  b.dc = *b.delta0_a + *b.delta0_b;
  // Measured on the critical independent set just built, not derived.
  b.idc = static_cast<std::size_t>(difference(g, s.ker));
  return s;
}

bool is_side_critical(const Graph& g, const Bipartition& bp, const VertexSet& x, Side side) {
  if (!x.is_subset_of(bp.side(side))) {
    throw GraphError(std::string("set is not contained in side ") + side_name(side));
  }
  return difference(g, x) == static_cast<std::int64_t>(delta0(g, bp, side));
}

bool is_critical(const Graph& g, const VertexSet& x, const OracleLimits& limits) {
  return difference(g, x) == static_cast<std::int64_t>(critical_difference(g, limits));
}

bool is_critical_independent(const Graph& g, const VertexSet& x, const OracleLimits& limits) {
  return is_independent(g, x) && is_critical(g, x, limits);
}

KerCertificate ker_certificate(const Graph& g, const VertexSet& x, const OracleLimits& limits) {
  if (!is_independent(g, x)) throw NotCriticalIndependentError("set is not independent");
  if (!is_critical(g, x, limits)) {
    throw NotCriticalIndependentError("set is independent but d(X) is below the critical difference");
  }
  const VertexSet nx = neighborhood(g, x);
  KerCertificate cert;
  cert.is_ker = true;
  x.for_each([&](VertexId v) {
    if (!cert.is_ker) return;
    VertexSet shrunk = x;
    shrunk.erase(v);
    auto result = saturating_matching(g, nx, shrunk);
    if (auto* hall = std::get_if<HallViolator>(&result)) {
      cert.is_ker = false;
      cert.removable = v;
      cert.witness = std::move(hall->violator);
    }
  });
  return cert;
}

}  // namespace critset
