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

#include "critset/matching.hpp"

#include <cstdint>
#include <string>

namespace critset {

void Matching::match(VertexId u, VertexId v) {
  if (u == v) throw GraphError("cannot match a vertex with itself");
  unmatch(u);
  unmatch(v);
  mate_[u] = v;
  mate_[v] = u;
  ++pairs_;
}

void Matching::unmatch(VertexId v) {
  const VertexId w = mate_[v];
  if (w == kUnmatched) return;
  mate_[v] = kUnmatched;
  mate_[w] = kUnmatched;
  --pairs_;
}

std::vector<Edge> Matching::pairs() const {
  std::vector<Edge> out;
  out.reserve(pairs_);
  for (VertexId v = 0; v < mate_.size(); ++v) {
    if (mate_[v] != kUnmatched && v < mate_[v]) out.push_back({v, mate_[v]});
  }
  return out;
}

VertexSet Matching::mates_of(const VertexSet& x) const {
  std::vector<VertexId> ids;
  x.for_each([&](VertexId v) {
    if (mate_[v] != kUnmatched) ids.push_back(mate_[v]);
  });
  return VertexSet::from_ids(x.universe(), ids);
}

bool Matching::is_valid_for(const Graph& g) const {
  if (mate_.size() != g.order()) return false;
  std::size_t count = 0;
  for (VertexId v = 0; v < mate_.size(); ++v) {
    const VertexId w = mate_[v];
    if (w == kUnmatched) continue;
    if (w >= mate_.size() || mate_[w] != v || !g.adjacent(v, w)) return false;
    ++count;
  }
  return count == 2 * pairs_;
}

namespace {

constexpr std::uint32_t kNil = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

// Bipartite graph in local indices: left 0..L-1, right 0..R-1.
struct LocalBipartite {
  std::vector<VertexId> left;
  std::vector<VertexId> right;
  std::vector<std::size_t> offsets;  // size L+1
  std::vector<std::uint32_t> adj;    // right indices, ascending per row
};

// Keeps only edges from `left_set` to `right_set`.
LocalBipartite localize(const Graph& g, const VertexSet& left_set, const VertexSet& right_set) {
  LocalBipartite lb;
  lb.left = left_set.ids();
  lb.right = right_set.ids();
  std::vector<std::uint32_t> right_index(g.order(), kNil);
  for (std::uint32_t i = 0; i < lb.right.size(); ++i) right_index[lb.right[i]] = i;
  lb.offsets.reserve(lb.left.size() + 1);
  lb.offsets.push_back(0);
  for (VertexId u : lb.left) {
    for (VertexId w : g.neighbors(u)) {
      if (right_index[w] != kNil) lb.adj.push_back(right_index[w]);
    }
    lb.offsets.push_back(lb.adj.size());
  }
  return lb;
}

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const LocalBipartite& lb)
      : lb_(lb),
        mate_left_(lb.left.size(), kNil),
        mate_right_(lb.right.size(), kNil),
        dist_(lb.left.size(), kInf),
        cursor_(lb.left.size(), 0) {}

  std::size_t run() {
    std::size_t size = 0;
    while (layer()) {
      for (std::uint32_t u = 0; u < lb_.left.size(); ++u) cursor_[u] = lb_.offsets[u];
      for (std::uint32_t u = 0; u < lb_.left.size(); ++u) {
        if (mate_left_[u] == kNil && augment_from(u)) ++size;
      }
    }
    return size;
  }

  const std::vector<std::uint32_t>& mate_left() const { return mate_left_; }
  const std::vector<std::uint32_t>& mate_right() const { return mate_right_; }

 private:
  bool layer() {
    queue_.clear();
    for (std::uint32_t u = 0; u < lb_.left.size(); ++u) {
      if (mate_left_[u] == kNil) {
        dist_[u] = 0;
        queue_.push_back(u);
      } else {
        dist_[u] = kInf;
      }
    }
    free_layer_ = kInf;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const std::uint32_t u = queue_[head];
      if (dist_[u] >= free_layer_) continue;
      for (std::size_t e = lb_.offsets[u]; e < lb_.offsets[u + 1]; ++e) {
        const std::uint32_t w = mate_right_[lb_.adj[e]];
        if (w == kNil) {
          if (free_layer_ == kInf) free_layer_ = dist_[u] + 1;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue_.push_back(w);
        }
      }
    }
    return free_layer_ != kInf;
  }

  // Iterative layered DFS; the stack holds left vertices, each parked on the
  // edge it is currently trying.
  bool augment_from(std::uint32_t root) {
    stack_.clear();
    stack_.push_back(root);
    while (!stack_.empty()) {
      const std::uint32_t u = stack_.back();
      if (cursor_[u] == lb_.offsets[u + 1]) {
        dist_[u] = kInf;
        stack_.pop_back();
        continue;
      }
      const std::uint32_t r = lb_.adj[cursor_[u]];
      const std::uint32_t w = mate_right_[r];
      if (w == kNil) {
        if (dist_[u] + 1 == free_layer_) {
          for (std::uint32_t x : stack_) {
            const std::uint32_t rx = lb_.adj[cursor_[x]];
            mate_left_[x] = rx;
            mate_right_[rx] = x;
          }
          return true;
        }
        ++cursor_[u];
      } else if (dist_[w] != kInf && dist_[w] == dist_[u] + 1) {
        stack_.push_back(w);
      } else {
        ++cursor_[u];
      }
    }
    return false;
  }

  const LocalBipartite& lb_;
  std::vector<std::uint32_t> mate_left_;
  std::vector<std::uint32_t> mate_right_;
  std::vector<std::uint32_t> dist_;
  std::vector<std::size_t> cursor_;
  std::vector<std::uint32_t> queue_;
  std::vector<std::uint32_t> stack_;
  std::uint32_t free_layer_ = kInf;
};

Matching to_global(std::size_t n, const LocalBipartite& lb, const HopcroftKarp& hk) {
  Matching m(n);
  for (std::uint32_t u = 0; u < lb.left.size(); ++u) {
    const std::uint32_t r = hk.mate_left()[u];
    if (r != kNil) m.match(lb.left[u], lb.right[r]);
  }
  return m;
}

}  // namespace

Matching max_matching(const Graph& g, const Bipartition& bp) {
  const LocalBipartite lb = localize(g, bp.side(Side::A), bp.side(Side::B));
  HopcroftKarp hk(lb);
  hk.run();
  return to_global(g.order(), lb, hk);
}

VertexSet alternating_reachable(const Graph& g, const Bipartition& bp, const Matching& m,
                                Side from) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<VertexId> queue;
  bp.side(from).for_each([&](VertexId v) {
    if (!m.is_matched(v)) {
      seen[v] = 1;
      queue.push_back(v);
    }
  });
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    const auto own_mate = m.mate(x);
    // Only side-`from` vertices enter the queue; the opposite side is crossed
    // through the matching edge right away.
    for (VertexId y : g.neighbors(x)) {
      if (seen[y] || (own_mate && *own_mate == y)) continue;
      seen[y] = 1;
      if (const auto z = m.mate(y); z && !seen[*z]) {
        seen[*z] = 1;
        queue.push_back(*z);
      }
    }
  }
  std::vector<VertexId> ids;
  for (VertexId v = 0; v < n; ++v) {
    if (seen[v]) ids.push_back(v);
  }
  return VertexSet::from_ids(n, ids);
}

bool has_augmenting_path(const Graph& g, const Bipartition& bp, const Matching& m) {
  const VertexSet reach = alternating_reachable(g, bp, m, Side::A);
  bool found = false;
  (reach & bp.side(Side::B)).for_each([&](VertexId v) { found = found || !m.is_matched(v); });
  return found;
}

VertexSet min_vertex_cover(const Graph& g, const Bipartition& bp, const Matching& m) {
  const VertexSet z = alternating_reachable(g, bp, m, Side::A);
  return (bp.side(Side::A) - z) | (bp.side(Side::B) & z);
}

VertexSet max_independent_set(const Graph& g, const Bipartition& bp) {
  return min_vertex_cover(g, bp, max_matching(g, bp)).complement();
}

std::variant<Matching, HallViolator> saturating_matching(const Graph& g, const VertexSet& source,
                                                         const VertexSet& target) {
  if (source.intersects(target)) {
    throw GraphError("saturating_matching: source and target must be disjoint");
  }
  const LocalBipartite lb = localize(g, source, target);
  HopcroftKarp hk(lb);
  const std::size_t size = hk.run();
  if (size == lb.left.size()) return to_global(g.order(), lb, hk);

  // Alternating search from the free source vertices; the source vertices it
  // reaches have fewer target neighbors than members.
  std::vector<char> seen(lb.left.size(), 0);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t u = 0; u < lb.left.size(); ++u) {
    if (hk.mate_left()[u] == kNil) {
      seen[u] = 1;
      queue.push_back(u);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t u = queue[head];
    for (std::size_t e = lb.offsets[u]; e < lb.offsets[u + 1]; ++e) {
      const std::uint32_t w = hk.mate_right()[lb.adj[e]];
      if (w != kNil && !seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<VertexId> ids;
  for (std::uint32_t u = 0; u < lb.left.size(); ++u) {
    if (seen[u]) ids.push_back(lb.left[u]);
  }
  return HallViolator{VertexSet::from_ids(g.order(), ids)};
}

}  // namespace critset
