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
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qsep {

// Dense row vector over GF(2).
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  int bits() const { return bits_; }
  bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i, bool value = true) {
    auto bit = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= bit;
    } else {
      words_[i >> 6] &= ~bit;
    }
  }
  BitRow& operator^=(const BitRow& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  bool is_zero() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }
  // Lowest set bit, or -1.
  int lowest() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    }
    return -1;
  }
  bool operator==(const BitRow& o) const = default;

 private:
  int bits_ = 0;
  std::vector<std::uint64_t> words_;
};

// Incrementally maintained reduced basis of a GF(2) row space, keyed by the
// lowest set bit of each basis row.
class RowBasis {
 public:
  explicit RowBasis(int bits) : pivot_row_(bits, -1) {}

  // Reduces `row` against the basis in place; returns true if it became zero.
  bool reduce(BitRow& row) const {
    for (int p = row.lowest(); p >= 0; p = row.lowest()) {
      int idx = pivot_row_[p];
      if (idx < 0) return false;
      row ^= rows_[idx];
    }
    return true;
  }
  // Whether `row` lies in the span, without modifying the basis.
  bool contains(BitRow row) const { return reduce(row); }
  // Adds `row` to the span; returns true if the rank increased.
  bool add(BitRow row) {
    if (reduce(row)) return false;
    pivot_row_[row.lowest()] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<int> pivot_row_;
  std::vector<BitRow> rows_;
};

inline int gf2_rank(const std::vector<BitRow>& rows) {
  if (rows.empty()) return 0;
  RowBasis basis(rows.front().bits());
  for (const auto& r : rows) basis.add(r);
  return basis.rank();
}

}  // namespace qsep
