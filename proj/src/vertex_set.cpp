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

#include "qsep/vertex_set.hpp"

#include <algorithm>
#include <sstream>

#include "qsep/errors.hpp"

namespace qsep {

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) throw InputError("negative vertex universe");
  words_.assign((static_cast<std::size_t>(universe) + 63) / 64, 0);
}

VertexSet::VertexSet(int universe, std::span<const int> members)
    : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members)
    : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > 64) throw InputError("mask conversion needs universe <= 64");
  VertexSet s(universe);
  if (universe > 0) s.words_[0] = mask;
  s.trim();
  if (s.words_.empty() ? mask != 0 : s.words_[0] != mask) {
    throw InputError("mask has bits outside the universe");
  }
  return s;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= universe_) {
    throw InputError("vertex " + std::to_string(v) + " out of range [0," +
                     std::to_string(universe_) + ")");
  }
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= universe_) {
    throw InputError("vertex " + std::to_string(v) + " out of range");
  }
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

void VertexSet::check_same(const VertexSet& o) const {
  if (universe_ != o.universe_) {
    throw InputError("vertex sets over different universes (" +
                     std::to_string(universe_) + " vs " +
                     std::to_string(o.universe_) + ")");
  }
}

void VertexSet::trim() {
  if (universe_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
  VertexSet r = *this;
  r |= o;
  return r;
}
VertexSet VertexSet::operator&(const VertexSet& o) const {
  VertexSet r = *this;
  r &= o;
  return r;
}
VertexSet VertexSet::operator-(const VertexSet& o) const {
  VertexSet r = *this;
  r -= o;
  return r;
}
VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_same(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}
VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_same(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}
VertexSet& VertexSet::operator-=(const VertexSet& o) {
  check_same(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

VertexSet VertexSet::operator^(const VertexSet& o) const {
  VertexSet r = *this;
  r ^= o;
  return r;
}
VertexSet& VertexSet::operator^=(const VertexSet& o) {
  check_same(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet r = *this;
  for (auto& w : r.words_) w = ~w;
  r.trim();
  return r;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  check_same(o);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~o.words_[i]) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  check_same(o);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & o.words_[i]) return true;
  }
  return false;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::uint64_t VertexSet::to_mask() const {
  if (universe_ > 64) throw InputError("mask conversion needs universe <= 64");
  return words_.empty() ? 0 : words_[0];
}

int VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
  }
  return -1;
}

bool VertexSet::lex_less(const VertexSet& o) const {
  check_same(o);
  // Find the smallest element in the symmetric difference. The set holding it
  // is smaller unless the other set has nothing beyond it (then the other is a
  // proper prefix).
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t diff = words_[w] ^ o.words_[w];
    if (!diff) continue;
    int bit = std::countr_zero(diff);
    bool mine = (words_[w] >> bit) & 1u;
    const auto& other = mine ? o.words_ : words_;
    std::uint64_t above = bit == 63 ? 0 : (other[w] >> (bit + 1));
    bool other_has_more = above != 0;
    for (std::size_t j = w + 1; !other_has_more && j < other.size(); ++j) {
      other_has_more = other[j] != 0;
    }
    return mine ? other_has_more : !other_has_more;
  }
  return false;
}

std::string VertexSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first_item = true;
  for_each([&](int v) {
    if (!first_item) out << ',';
    out << v;
    first_item = false;
  });
  out << '}';
  return out.str();
}

bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t diff = a ^ b;
  if (!diff) return false;
  int bit = std::countr_zero(diff);
  bool in_a = (a >> bit) & 1u;
  std::uint64_t other = in_a ? b : a;
  bool other_has_more = bit < 63 && (other >> (bit + 1)) != 0;
  return in_a ? other_has_more : !other_has_more;
}

}  // namespace qsep
