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

#include <random>

#include "doctest.h"
#include "qsep/errors.hpp"
#include "qsep/vertex_set.hpp"

using qsep::VertexSet;

TEST_CASE("vertex set basics") {
  VertexSet s(10, {7, 2, 2, 5});
  CHECK(s.size() == 3);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(3));
  CHECK_FALSE(s.contains(-1));
  CHECK(s.to_vector() == std::vector<int>{2, 5, 7});
  CHECK(s.to_string() == "{2,5,7}");
  s.erase(5);
  CHECK(s.to_vector() == std::vector<int>{2, 7});
  CHECK_THROWS_AS(s.insert(10), qsep::InputError);
  CHECK_THROWS_AS(VertexSet(3, {3}), qsep::InputError);
}

TEST_CASE("vertex set algebra crosses word boundaries") {
  VertexSet a(130, {0, 63, 64, 129});
  VertexSet b(130, {63, 100});
  CHECK((a | b).to_vector() == std::vector<int>{0, 63, 64, 100, 129});
  CHECK((a & b).to_vector() == std::vector<int>{63});
  CHECK((a - b).to_vector() == std::vector<int>{0, 64, 129});
  CHECK((a ^ b).to_vector() == std::vector<int>{0, 64, 100, 129});
  CHECK(a.complement().size() == 126);
  CHECK(VertexSet::full(130).size() == 130);
  CHECK((a & b).is_subset_of(a));
  CHECK(a.intersects(b));
  CHECK(a.first() == 0);
  CHECK_THROWS_AS(a | VertexSet(129), qsep::InputError);
}

TEST_CASE("vertex set masks and lexicographic order") {
  const auto s = VertexSet::from_mask(8, 0b10110);
  CHECK(s.to_vector() == std::vector<int>{1, 2, 4});
  CHECK(s.to_mask() == 0b10110u);
  CHECK(VertexSet(5, {0, 4}).lex_less(VertexSet(5, {1})));
  CHECK(VertexSet(5, {}).lex_less(VertexSet(5, {0})));
  CHECK(VertexSet(5, {1}).lex_less(VertexSet(5, {1, 2})));
  CHECK_FALSE(VertexSet(5, {1, 2}).lex_less(VertexSet(5, {1, 2})));
  CHECK(qsep::mask_lex_less(0b10001, 0b00010));
}

TEST_CASE("mask order agrees with set order") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint64_t a = rng() & 0xFFF, b = rng() & 0xFFF;
    const auto sa = VertexSet::from_mask(12, a), sb = VertexSet::from_mask(12, b);
    CHECK(qsep::mask_lex_less(a, b) == sa.lex_less(sb));
    CHECK(qsep::mask_lex_less(a, b) == (sa.to_vector() < sb.to_vector()));
  }
}
