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

#ifndef CRITSET_VERTEX_SET_HPP_
#define CRITSET_VERTEX_SET_HPP_

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace critset {

using VertexId = std::uint32_t;

/// A subset of {0, ..., universe-1}.
///
/// Universes of up to kMaskCapacity vertices are stored as a two-word bit
/// mask; larger universes use a sorted id vector. Both representations obey
/// the same contract, and binary operations require equal universes.
class VertexSet {
 public:
  static constexpr std::size_t kMaskCapacity = 128;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe) {}

  static VertexSet from_ids(std::size_t universe, std::span<const VertexId> ids);
  static VertexSet from_ids(std::size_t universe, std::initializer_list<VertexId> ids);
  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  bool uses_mask() const { return universe_ <= kMaskCapacity; }

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  bool contains(VertexId v) const;

  void insert(VertexId v);
  void erase(VertexId v);

  /// Members in ascending order.
  std::vector<VertexId> ids() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    if (uses_mask()) {
      for (std::size_t w = 0; w < mask_.size(); ++w) {
        std::uint64_t bits = mask_[w];
        while (bits != 0) {
          fn(static_cast<VertexId>(w * 64 + std::countr_zero(bits)));
          bits &= bits - 1;
        }
      }
    } else {
      for (VertexId v : sorted_) fn(v);
    }
  }

  /// V - this, within the same universe.
  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.mask_ == b.mask_ && a.sorted_ == b.sorted_;
  }

 private:
  void check_member(VertexId v) const;
  void check_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::array<std::uint64_t, 2> mask_{};
  std::vector<VertexId> sorted_;
};

}  // namespace critset

#endif  // CRITSET_VERTEX_SET_HPP_
