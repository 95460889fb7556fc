// Copyright 2026 The qsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qsep {

// Fixed-universe set of vertex indices backed by 64-bit words.
//
// Every binary operation requires both operands to share the same universe
// size; mixing universes throws InputError. Serialization (`to_vector`) is
// always strictly increasing.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::span<const int> members);
  VertexSet(int universe, std::initializer_list<int> members);

  static VertexSet full(int universe);
  static VertexSet from_mask(int universe, std::uint64_t mask);

  int universe() const { return universe_; }
  bool contains(int v) const {
    return v >= 0 && v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u);
  }
  void insert(int v);
  void erase(int v);
  int size() const;
  bool empty() const;

  VertexSet operator|(const VertexSet& o) const;
  VertexSet operator&(const VertexSet& o) const;
  VertexSet operator-(const VertexSet& o) const;
  VertexSet operator^(const VertexSet& o) const;
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  VertexSet& operator^=(const VertexSet& o);
  VertexSet complement() const;

  bool is_subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;

  std::vector<int> to_vector() const;
  // Only valid for universes of at most 64 vertices.
  std::uint64_t to_mask() const;
  // Smallest member or -1.
  int first() const;

  // Calls f(v) for each member in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(static_cast<int>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  bool operator==(const VertexSet& o) const = default;
  // Lexicographic order of the sorted member lists.
  bool lex_less(const VertexSet& o) const;

  std::string to_string() const;

 private:
  void check_same(const VertexSet& o) const;
  void trim();

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Lexicographic comparison of the sorted member lists of two bitmasks.
bool mask_lex_less(std::uint64_t a, std::uint64_t b);

}  // namespace qsep
