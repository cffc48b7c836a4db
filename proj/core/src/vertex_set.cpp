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

#include "critset/vertex_set.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

namespace critset {

VertexSet VertexSet::from_ids(std::size_t universe, std::span<const VertexId> ids) {
  VertexSet s(universe);
  if (s.uses_mask()) {
    for (VertexId v : ids) s.insert(v);
    return s;
  }
  for (VertexId v : ids) s.check_member(v);
  s.sorted_.assign(ids.begin(), ids.end());
  std::sort(s.sorted_.begin(), s.sorted_.end());
  s.sorted_.erase(std::unique(s.sorted_.begin(), s.sorted_.end()), s.sorted_.end());
  return s;
}

VertexSet VertexSet::from_ids(std::size_t universe, std::initializer_list<VertexId> ids) {
  return from_ids(universe, std::span<const VertexId>(ids.begin(), ids.size()));
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  if (s.uses_mask()) {
    for (std::size_t w = 0; w < s.mask_.size(); ++w) {
      const std::size_t lo = w * 64;
      if (universe <= lo) break;
      const std::size_t bits = std::min<std::size_t>(64, universe - lo);
      s.mask_[w] = bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
    }
  } else {
    s.sorted_.resize(universe);
    for (std::size_t v = 0; v < universe; ++v) s.sorted_[v] = static_cast<VertexId>(v);
  }
  return s;
}

void VertexSet::check_member(VertexId v) const {
  if (v >= universe_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                            std::to_string(universe_));
  }
}

void VertexSet::check_universe(const VertexSet& other) const {
  if (other.universe_ != universe_) {
    throw std::invalid_argument("vertex sets over different universes (" +
                                std::to_string(universe_) + " vs " +
                                std::to_string(other.universe_) + ")");
  }
}

std::size_t VertexSet::size() const {
  if (uses_mask()) return std::popcount(mask_[0]) + std::popcount(mask_[1]);
  return sorted_.size();
}

bool VertexSet::contains(VertexId v) const {
  if (v >= universe_) return false;
  if (uses_mask()) return (mask_[v / 64] >> (v % 64)) & 1U;
  return std::binary_search(sorted_.begin(), sorted_.end(), v);
}

void VertexSet::insert(VertexId v) {
  check_member(v);
  if (uses_mask()) {
    mask_[v / 64] |= std::uint64_t{1} << (v % 64);
    return;
  }
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), v);
  if (it == sorted_.end() || *it != v) sorted_.insert(it, v);
}

void VertexSet::erase(VertexId v) {
  if (v >= universe_) return;
  if (uses_mask()) {
    mask_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    return;
  }
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), v);
  if (it != sorted_.end() && *it == v) sorted_.erase(it);
}

std::vector<VertexId> VertexSet::ids() const {
  if (!uses_mask()) return sorted_;
  std::vector<VertexId> out;
  out.reserve(size());
  for_each([&](VertexId v) { out.push_back(v); });
  return out;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_universe(other);
  if (uses_mask()) {
    return (mask_[0] & ~other.mask_[0]) == 0 && (mask_[1] & ~other.mask_[1]) == 0;
  }
  return std::includes(other.sorted_.begin(), other.sorted_.end(), sorted_.begin(),
                       sorted_.end());
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_universe(other);
  if (uses_mask()) return (mask_[0] & other.mask_[0]) != 0 || (mask_[1] & other.mask_[1]) != 0;
  auto a = sorted_.begin();
  auto b = other.sorted_.begin();
  while (a != sorted_.end() && b != other.sorted_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_universe(other);
  if (uses_mask()) {
    mask_[0] |= other.mask_[0];
    mask_[1] |= other.mask_[1];
    return *this;
  }
  std::vector<VertexId> out;
  out.reserve(sorted_.size() + other.sorted_.size());
  std::set_union(sorted_.begin(), sorted_.end(), other.sorted_.begin(), other.sorted_.end(),
                 std::back_inserter(out));
  sorted_ = std::move(out);
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_universe(other);
  if (uses_mask()) {
    mask_[0] &= other.mask_[0];
    mask_[1] &= other.mask_[1];
    return *this;
  }
  std::vector<VertexId> out;
  std::set_intersection(sorted_.begin(), sorted_.end(), other.sorted_.begin(),
                        other.sorted_.end(), std::back_inserter(out));
  sorted_ = std::move(out);
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_universe(other);
  if (uses_mask()) {
    mask_[0] &= ~other.mask_[0];
    mask_[1] &= ~other.mask_[1];
    return *this;
  }
  std::vector<VertexId> out;
  std::set_difference(sorted_.begin(), sorted_.end(), other.sorted_.begin(), other.sorted_.end(),
                      std::back_inserter(out));
  sorted_ = std::move(out);
  return *this;
}

}  // namespace critset
