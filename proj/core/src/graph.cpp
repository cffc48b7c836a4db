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

#include "critset/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace critset {

bool Graph::adjacent(VertexId u, VertexId v) const {
  if (u >= order() || v >= order()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<VertexId>::max()) {
    throw GraphError("vertex count " + std::to_string(n) + " too large");
  }
  Graph g;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.targets_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so filling in edge order leaves each list sorted.
  for (const Edge& e : g.edges_) g.targets_[cursor[e.v]++] = e.u;
  for (const Edge& e : g.edges_) g.targets_[cursor[e.u]++] = e.v;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  return g;
}

Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

namespace {

void require_same_universe(const Graph& g, const VertexSet& x) {
  if (x.universe() != g.order()) {
    throw GraphError("vertex set universe " + std::to_string(x.universe()) +
                     " does not match graph order " + std::to_string(g.order()));
  }
}

}  // namespace

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
  require_same_universe(g, x);
  if (x.uses_mask()) {
    VertexSet out(g.order());
    x.for_each([&](VertexId v) {
      for (VertexId w : g.neighbors(v)) out.insert(w);
    });
    return out;
  }
  // mark and scan: O(n + sum of degrees), no sort
  std::vector<char> mark(g.order(), 0);
  x.for_each([&](VertexId v) {
    for (VertexId w : g.neighbors(v)) mark[w] = 1;
  });
  std::vector<VertexId> ids;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (mark[v]) ids.push_back(v);
  }
  return VertexSet::from_ids(g.order(), ids);
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
  return neighborhood(g, x) | x;
}

std::int64_t difference(const Graph& g, const VertexSet& x) {
  return static_cast<std::int64_t>(x.size()) -
         static_cast<std::int64_t>(neighborhood(g, x).size());
}

bool is_independent(const Graph& g, const VertexSet& x) {
  require_same_universe(g, x);
  bool independent = true;
  x.for_each([&](VertexId v) {
    if (!independent) return;
    for (VertexId w : g.neighbors(v)) {
      if (x.contains(w)) {
        independent = false;
        return;
      }
    }
  });
  return independent;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& w) {
  require_same_universe(g, w);
  constexpr VertexId kGone = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> remap(g.order(), kGone);
  InducedSubgraph out;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (w.contains(v)) continue;
    remap[v] = static_cast<VertexId>(out.to_original.size());
    out.to_original.push_back(v);
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (remap[e.u] != kGone && remap[e.v] != kGone) kept.push_back({remap[e.u], remap[e.v]});
  }
  out.graph = build_graph(out.to_original.size(), kept);
  return out;
}

Bipartition Bipartition::from_side_a(const Graph& g, VertexSet side_a) {
  require_same_universe(g, side_a);
  for (const Edge& e : g.edges()) {
    if (side_a.contains(e.u) == side_a.contains(e.v)) {
      throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") joins two vertices of side " + (side_a.contains(e.u) ? "A" : "B"));
    }
  }
  VertexSet side_b = side_a.complement();
  return Bipartition(std::move(side_a), std::move(side_b));
}

namespace {

std::string describe_cycle(const OddCycle& c) {
  std::string s = "graph is not bipartite; odd cycle:";
  for (VertexId v : c.vertices) s += " " + std::to_string(v);
  return s;
}

}  // namespace

NotBipartiteError::NotBipartiteError(OddCycle cycle)
    : GraphError(describe_cycle(cycle)), cycle_(std::move(cycle)) {}

std::variant<Bipartition, OddCycle> find_bipartition(const Graph& g) {
  const std::size_t n = g.order();
  constexpr VertexId kNone = std::numeric_limits<VertexId>::max();
  std::vector<std::int8_t> color(n, -1);
  std::vector<VertexId> parent(n, kNone);
  std::vector<VertexId> queue;
  queue.reserve(n);
  std::vector<VertexId> a_ids;

  for (VertexId root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId v = queue[head];
      if (color[v] == 0) a_ids.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = static_cast<std::int8_t>(1 - color[v]);
          parent[w] = v;
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          // Same color means equal BFS depth; climb both to the common ancestor.
          std::vector<VertexId> left{v};
          std::vector<VertexId> right{w};
          VertexId x = v;
          VertexId y = w;
          while (x != y) {
            x = parent[x];
            y = parent[y];
            left.push_back(x);
            right.push_back(y);
          }
          right.pop_back();
          OddCycle cycle;
          cycle.vertices.assign(left.begin(), left.end());
          cycle.vertices.insert(cycle.vertices.end(), right.rbegin(), right.rend());
          return cycle;
        }
      }
    }
  }
  return Bipartition::from_side_a(g, VertexSet::from_ids(n, a_ids));
}

Bipartition bipartition(const Graph& g) {
  auto result = find_bipartition(g);
  if (auto* cycle = std::get_if<OddCycle>(&result)) throw NotBipartiteError(std::move(*cycle));
  return std::get<Bipartition>(std::move(result));
}

bool is_bipartite(const Graph& g) {
  return std::holds_alternative<Bipartition>(find_bipartition(g));
}

}  // namespace critset
