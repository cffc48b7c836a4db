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

#include "critset/random.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace critset {

const char* graph_kind_name(GraphKind kind) {
  return kind == GraphKind::kBipartite ? "bipartite" : "general";
}

void GeneratorParams::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  if (order() == 0) throw std::invalid_argument("generated graph must have at least one vertex");
}

std::mt19937_64 instance_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

double unit_draw(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

RandomGraph random_graph(const GeneratorParams& params, std::uint64_t seed, std::uint64_t index) {
  params.validate();
  auto engine = instance_engine(seed, index);
  std::vector<Edge> edges;
  RandomGraph out;
  if (params.kind == GraphKind::kBipartite) {
    for (std::size_t a = 0; a < params.n_a; ++a) {
      for (std::size_t b = 0; b < params.n_b; ++b) {
        if (unit_draw(engine) < params.p) {
          edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(params.n_a + b)});
        }
      }
    }
    std::vector<VertexId> a_ids(params.n_a);
    for (std::size_t a = 0; a < params.n_a; ++a) a_ids[a] = static_cast<VertexId>(a);
    out.side_a = VertexSet::from_ids(params.order(), a_ids);
  } else {
    for (std::size_t u = 0; u < params.n; ++u) {
      for (std::size_t v = u + 1; v < params.n; ++v) {
        if (unit_draw(engine) < params.p) {
          edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
        }
      }
    }
  }
  out.graph = build_graph(params.order(), edges);
  return out;
}

RandomGraph random_bipartite_by_degree(std::size_t n_a, std::size_t n_b, double avg_degree,
                                       std::uint64_t seed) {
  if (n_a == 0 || n_b == 0) throw std::invalid_argument("both sides must be nonempty");
  if (!(avg_degree >= 0.0)) throw std::invalid_argument("average degree must be non-negative");
  auto engine = instance_engine(seed, 0);
  const auto target = static_cast<std::size_t>(std::llround(avg_degree * static_cast<double>(n_a + n_b) / 2.0));
  std::vector<Edge> edges;
  edges.reserve(target);
  for (std::size_t i = 0; i < target; ++i) {
    const auto a = static_cast<VertexId>(engine() % n_a);
    const auto b = static_cast<VertexId>(n_a + engine() % n_b);
    edges.push_back({a, b});
  }
  RandomGraph out;
  out.graph = build_graph(n_a + n_b, edges);
  std::vector<VertexId> a_ids(n_a);
  for (std::size_t a = 0; a < n_a; ++a) a_ids[a] = static_cast<VertexId>(a);
  out.side_a = VertexSet::from_ids(n_a + n_b, a_ids);
  return out;
}

}  // namespace critset
