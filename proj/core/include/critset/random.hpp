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

// Seeded random graphs that reproduce bit-for-bit on any platform.
//
// Instance `index` of stream `seed` draws from std::mt19937_64 seeded through
// std::seed_seq{lo32(seed), hi32(seed), lo32(index), hi32(index)}. Both
// algorithms are fixed by the C++ standard. Each candidate edge is kept when
// (engine() >> 11) * 2^-53 < p, tested in a fixed pair order:
//
//   bipartite: a = 0..nA-1 (outer), b = 0..nB-1 (inner), edge (a, nA + b)
//   general:   u = 0..n-1 (outer), v = u+1..n-1 (inner)
//
// std:: distributions are avoided because their output is implementation
// defined.

#ifndef CRITSET_RANDOM_HPP_
#define CRITSET_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "critset/graph.hpp"

namespace critset {

enum class GraphKind : std::uint8_t { kBipartite, kGeneral };

const char* graph_kind_name(GraphKind kind);

struct GeneratorParams {
  GraphKind kind = GraphKind::kGeneral;
  std::size_t n = 0;    // general
  std::size_t n_a = 0;  // bipartite
  std::size_t n_b = 0;  // bipartite
  double p = 0.5;

  std::size_t order() const { return kind == GraphKind::kBipartite ? n_a + n_b : n; }
  /// Throws std::invalid_argument on p outside [0, 1] or an empty graph.
  void validate() const;
};

struct RandomGraph {
  Graph graph;
  /// Declared side A (ids 0..nA-1) for the bipartite kind.
  std::optional<VertexSet> side_a;
};

std::mt19937_64 instance_engine(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) with 53 random bits.
double unit_draw(std::mt19937_64& engine);

RandomGraph random_graph(const GeneratorParams& params, std::uint64_t seed,
                         std::uint64_t index = 0);

/// Bipartite graph with about avg_degree * (nA + nB) / 2 edges, endpoints
/// drawn uniformly (duplicates dropped). For large benchmark instances.
RandomGraph random_bipartite_by_degree(std::size_t n_a, std::size_t n_b, double avg_degree,
                                       std::uint64_t seed);

}  // namespace critset

#endif  // CRITSET_RANDOM_HPP_
