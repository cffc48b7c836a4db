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

#include "critset/oracle.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <unordered_map>

namespace critset {

namespace {

constexpr std::size_t kMaskBits = 64;

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t v) { return Mask{1} << v; }

int popcount(Mask m) { return std::popcount(m); }

void require_order(const Graph& g, std::size_t bound, const char* what) {
  const std::size_t limit = std::min(bound, kMaskBits);
  if (g.order() > limit) throw OracleBoundError(what, g.order(), limit);
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= bit(e.v);
    adj[e.v] |= bit(e.u);
  }
  return adj;
}

std::vector<VertexId> vertex_order(std::size_t n, EnumerationOrder order) {
  std::vector<VertexId> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<VertexId>(order == EnumerationOrder::kAscending ? i : n - 1 - i);
  }
  return out;
}

// Visits every independent set exactly once by deciding vertices in `order`:
// visit(set, N(set)).
template <class Visit, class Prune>
class IndependentSetWalker {
 public:
  IndependentSetWalker(const std::vector<Mask>& adj, std::vector<VertexId> order, Visit visit,
                       Prune prune)
      : adj_(adj), order_(std::move(order)), suffix_(order_.size() + 1, 0), visit_(visit),
        prune_(prune) {
    for (std::size_t i = order_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] | bit(order_[i]);
  }

  void run() { walk(0, 0, 0); }

 private:
  void walk(std::size_t pos, Mask chosen, Mask blocked) {
    if (prune_(chosen, suffix_[pos] & ~blocked & ~chosen)) return;
    if (pos == order_.size()) {
      visit_(chosen, blocked);
      return;
    }
    const VertexId v = order_[pos];
    walk(pos + 1, chosen, blocked);
    if ((blocked & bit(v)) == 0) walk(pos + 1, chosen | bit(v), blocked | adj_[v]);
  }

  const std::vector<Mask>& adj_;
  std::vector<VertexId> order_;
  std::vector<Mask> suffix_;
  Visit visit_;
  Prune prune_;
};

template <class Visit, class Prune>
void walk_independent_sets(const std::vector<Mask>& adj, EnumerationOrder order, Visit visit,
                           Prune prune) {
  IndependentSetWalker<Visit, Prune> walker(adj, vertex_order(adj.size(), order), visit, prune);
  walker.run();
}

// Number of cliques in a greedy clique cover of `cand`; bounds alpha(G[cand]).
int clique_cover_bound(const std::vector<Mask>& adj, Mask cand) {
  int cliques = 0;
  while (cand != 0) {
    Mask grow = cand;
    Mask clique = 0;
    while (grow != 0) {
      const int v = std::countr_zero(grow);
      clique |= bit(v);
      grow &= adj[v];
      grow &= ~bit(v);
    }
    cand &= ~clique;
    ++cliques;
  }
  return cliques;
}

class AlphaSearch {
 public:
  explicit AlphaSearch(const std::vector<Mask>& adj) : adj_(adj) {}

  int solve(Mask cand) {
    best_ = 0;
    search(cand, 0);
    return best_;
  }

 private:
  void search(Mask cand, int size) {
    if (cand == 0) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + popcount(cand) <= best_) return;
    if (size + clique_cover_bound(adj_, cand) <= best_) return;
    int pick = -1;
    int pick_degree = -1;
    for (Mask rest = cand; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int deg = popcount(adj_[v] & cand);
      if (deg > pick_degree) {
        pick = v;
        pick_degree = deg;
      }
    }
    if (pick_degree == 0) {
      best_ = std::max(best_, size + popcount(cand));
      return;
    }
    search(cand & ~adj_[pick] & ~bit(pick), size + 1);
    search(cand & ~bit(pick), size);
  }

  const std::vector<Mask>& adj_;
  int best_ = 0;
};

// nbhd[x] = N(x) for every subset x of `vertices`, indexed by position bits.
std::vector<Mask> subset_neighborhoods(const std::vector<Mask>& adj,
                                       const std::vector<VertexId>& vertices) {
  const std::size_t k = vertices.size();
  std::vector<Mask> nbhd(std::size_t{1} << k, 0);
  for (std::size_t x = 1; x < nbhd.size(); ++x) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(x));
    nbhd[x] = nbhd[x & (x - 1)] | adj[vertices[low]];
  }
  return nbhd;
}

Mask expand_positions(const std::vector<VertexId>& vertices, std::size_t x) {
  Mask out = 0;
  while (x != 0) {
    out |= bit(vertices[static_cast<std::size_t>(std::countr_zero(x))]);
    x &= x - 1;
  }
  return out;
}

}  // namespace

OracleLimits OracleLimits::from_environment() {
  OracleLimits limits;
  if (const char* raw = std::getenv(kOracleBoundEnv); raw != nullptr && *raw != '\0') {
    std::size_t value = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec == std::errc() && ptr == end) return limits.with_order_bound(value);
  }
  return limits;
}

OracleLimits OracleLimits::with_order_bound(std::size_t bound) const {
  OracleLimits out = *this;
  out.max_order = std::min(bound, kMaskBits);
  out.max_subset_order = std::min(out.max_subset_order, out.max_order);
  out.max_side = std::min(out.max_side, out.max_order);
  return out;
}

OracleBoundError::OracleBoundError(const std::string& what_exceeded, std::size_t value,
                                   std::size_t bound)
    : std::length_error(what_exceeded + " " + std::to_string(value) +
                        " exceeds the oracle bound " + std::to_string(bound)),
      value_(value),
      bound_(bound) {}

const char* family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kMaximumIndependent:
      return "maximum-independent";
    case FamilyKind::kCriticalIndependent:
      return "critical-independent";
    case FamilyKind::kCritical:
      return "critical";
    case FamilyKind::kSideCriticalA:
      return "side-critical-A";
    case FamilyKind::kSideCriticalB:
      return "side-critical-B";
  }
  return "unknown";
}

SetFamily::SetFamily(FamilyKind kind, std::size_t universe, std::vector<std::uint64_t> masks)
    : kind_(kind), universe_(universe), masks_(std::move(masks)) {
  std::sort(masks_.begin(), masks_.end());
  masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

VertexSet SetFamily::member(std::size_t i) const { return from_mask(universe_, masks_.at(i)); }

std::vector<VertexSet> SetFamily::members() const {
  std::vector<VertexSet> out;
  out.reserve(masks_.size());
  for (Mask m : masks_) out.push_back(from_mask(universe_, m));
  return out;
}

bool SetFamily::contains(const VertexSet& s) const {
  return std::binary_search(masks_.begin(), masks_.end(), to_mask(s));
}

VertexSet SetFamily::intersection() const {
  Mask acc = universe_ >= kMaskBits ? ~Mask{0} : bit(universe_) - 1;
  for (Mask m : masks_) acc &= m;
  return from_mask(universe_, acc);
}

VertexSet SetFamily::union_all() const {
  Mask acc = 0;
  for (Mask m : masks_) acc |= m;
  return from_mask(universe_, acc);
}

std::vector<VertexSet> SetFamily::minimal_members() const {
  std::vector<VertexSet> out;
  for (Mask m : masks_) {
    const bool minimal = std::none_of(masks_.begin(), masks_.end(), [m](Mask o) {
      return o != m && (o & ~m) == 0;
    });
    if (minimal) out.push_back(from_mask(universe_, m));
  }
  return out;
}

std::vector<VertexSet> SetFamily::maximal_members() const {
  std::vector<VertexSet> out;
  for (Mask m : masks_) {
    const bool maximal = std::none_of(masks_.begin(), masks_.end(), [m](Mask o) {
      return o != m && (m & ~o) == 0;
    });
    if (maximal) out.push_back(from_mask(universe_, m));
  }
  return out;
}

std::uint64_t to_mask(const VertexSet& s) {
  if (s.universe() > kMaskBits) {
    throw OracleBoundError("vertex set universe", s.universe(), kMaskBits);
  }
  Mask m = 0;
  s.for_each([&](VertexId v) { m |= bit(v); });
  return m;
}

VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
  VertexSet s(universe);
  while (mask != 0) {
    s.insert(static_cast<VertexId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return s;
}

std::size_t oracle_alpha(const Graph& g, const OracleLimits& limits) {
  require_order(g, limits.max_order, "graph order");
  const auto adj = adjacency_masks(g);
  AlphaSearch search(adj);
  const Mask all = g.order() == kMaskBits ? ~Mask{0} : bit(g.order()) - 1;
  return static_cast<std::size_t>(search.solve(all));
}

SetFamily oracle_omega(const Graph& g, const OracleLimits& limits, EnumerationOrder order) {
  const std::size_t alpha = oracle_alpha(g, limits);
  const auto adj = adjacency_masks(g);
  std::vector<Mask> found;
  walk_independent_sets(
      adj, order,
      [&](Mask chosen, Mask) {
        if (static_cast<std::size_t>(popcount(chosen)) == alpha) found.push_back(chosen);
      },
      [&](Mask chosen, Mask open) {
        return static_cast<std::size_t>(popcount(chosen) + popcount(open)) < alpha;
      });
  return SetFamily(FamilyKind::kMaximumIndependent, g.order(), std::move(found));
}

CriticalIndependentFamily oracle_critical_independent_family(const Graph& g,
                                                             const OracleLimits& limits,
                                                             EnumerationOrder order) {
  require_order(g, limits.max_order, "graph order");
  const auto adj = adjacency_masks(g);
  int best = 0;  // d(empty set) = 0
  std::vector<Mask> found;
  walk_independent_sets(
      adj, order,
      [&](Mask chosen, Mask blocked) {
        const int d = popcount(chosen) - popcount(blocked);
        if (d > best) {
          best = d;
          found.clear();
        }
        if (d == best) found.push_back(chosen);
      },
      [](Mask, Mask) { return false; });
  return {static_cast<std::size_t>(best),
          SetFamily(FamilyKind::kCriticalIndependent, g.order(), std::move(found))};
}

std::size_t oracle_dc(const Graph& g, const OracleLimits& limits) {
  require_order(g, limits.max_subset_order, "graph order (all-subset enumeration)");
  const auto adj = adjacency_masks(g);
  const auto all = vertex_order(g.order(), EnumerationOrder::kAscending);
  const auto nbhd = subset_neighborhoods(adj, all);
  int best = 0;
  for (std::size_t x = 0; x < nbhd.size(); ++x) {
    best = std::max(best, std::popcount(x) - popcount(nbhd[x]));
  }
  return static_cast<std::size_t>(best);
}

CriticalFamily oracle_critical_sets(const Graph& g, const OracleLimits& limits) {
  const std::size_t dc = oracle_dc(g, limits);
  const auto adj = adjacency_masks(g);
  const auto all = vertex_order(g.order(), EnumerationOrder::kAscending);
  const auto nbhd = subset_neighborhoods(adj, all);
  std::vector<Mask> found;
  for (std::size_t x = 0; x < nbhd.size(); ++x) {
    if (std::popcount(x) - popcount(nbhd[x]) == static_cast<int>(dc)) {
      found.push_back(static_cast<Mask>(x));
    }
  }
  return {dc, SetFamily(FamilyKind::kCritical, g.order(), std::move(found))};
}

SideCriticalFamily oracle_side_critical_family(const Graph& g, const Bipartition& bp, Side side,
                                               const OracleLimits& limits) {
  require_order(g, kMaskBits, "graph order");
  const std::vector<VertexId> vertices = bp.side(side).ids();
  if (vertices.size() > limits.max_side) {
    throw OracleBoundError("side size", vertices.size(), limits.max_side);
  }
  const auto adj = adjacency_masks(g);
  const auto nbhd = subset_neighborhoods(adj, vertices);
  int best = 0;
  for (std::size_t x = 0; x < nbhd.size(); ++x) {
    best = std::max(best, std::popcount(x) - popcount(nbhd[x]));
  }
  std::vector<Mask> found;
  for (std::size_t x = 0; x < nbhd.size(); ++x) {
    if (std::popcount(x) - popcount(nbhd[x]) == best) found.push_back(expand_positions(vertices, x));
  }
  const FamilyKind kind = side == Side::A ? FamilyKind::kSideCriticalA : FamilyKind::kSideCriticalB;
  return {static_cast<std::size_t>(best), SetFamily(kind, g.order(), std::move(found))};
}

namespace {

class MatchingSearch {
 public:
  explicit MatchingSearch(const std::vector<Mask>& adj) : adj_(adj) {}

  int solve(Mask alive) {
    if (alive == 0) return 0;
    if (auto it = memo_.find(alive); it != memo_.end()) return it->second;
    const int v = std::countr_zero(alive);
    const Mask rest = alive & ~bit(v);
    const int ceiling = popcount(alive) / 2;
    // v left unmatched
    int best = solve(rest);
    for (Mask partners = adj_[v] & rest; partners != 0 && best < ceiling; partners &= partners - 1) {
      const int u = std::countr_zero(partners);
      best = std::max(best, 1 + solve(rest & ~bit(u)));
    }
    memo_.emplace(alive, best);
    return best;
  }

 private:
  const std::vector<Mask>& adj_;
  std::unordered_map<Mask, int> memo_;
};

}  // namespace

std::size_t oracle_mu(const Graph& g, const OracleLimits& limits) {
  require_order(g, limits.max_order, "graph order");
  const auto adj = adjacency_masks(g);
  MatchingSearch search(adj);
  const Mask all = g.order() == kMaskBits ? ~Mask{0} : bit(g.order()) - 1;
  return static_cast<std::size_t>(search.solve(all));
}

}  // namespace critset
