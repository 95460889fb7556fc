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

#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "qsep/errors.hpp"
#include "qsep/stabilizer.hpp"

using namespace qsep;

namespace {

StabilizerCode code_of(std::initializer_list<const char*> words) {
  std::vector<PauliWord> gens;
  for (auto* w : words) gens.push_back(parse_pauli(w));
  return build_code(gens);
}

std::vector<StabilizerCode> small_codes() {
  return {builtin_family(CodeFamily::repetition, 3), builtin_family(CodeFamily::repetition, 5),
          builtin_family(CodeFamily::five_qubit), builtin_family(CodeFamily::steane),
          builtin_family(CodeFamily::rotated_surface, 3), builtin_family(CodeFamily::toric, 2)};
}

}  // namespace

TEST_CASE("parse_pauli letter mapping") {
  const auto p = parse_pauli("XZZXI");
  CHECK(p.x.to_vector() == std::vector<int>{0, 3});
  CHECK(p.z.to_vector() == std::vector<int>{1, 2});
  CHECK(parse_pauli("IIIII").weight() == 0);
  const auto y = parse_pauli("Y");
  CHECK(y.x.contains(0));
  CHECK(y.z.contains(0));
  CHECK(parse_pauli("XYZI").to_string() == "XYZI");
  CHECK_THROWS_AS(parse_pauli(""), InputError);
  CHECK_THROWS_AS(parse_pauli("XQ"), InputError);
}

TEST_CASE("commutation") {
  CHECK(commutes(parse_pauli("XX"), parse_pauli("ZZ")));
  CHECK_FALSE(commutes(parse_pauli("XI"), parse_pauli("ZI")));
  CHECK(commutes(parse_pauli("XZZXI"), parse_pauli("IXZZX")));
  CHECK_THROWS_AS(commutes(parse_pauli("X"), parse_pauli("XX")), InputError);
}

TEST_CASE("build_code rank and errors") {
  const auto rep = code_of({"ZZI", "IZZ"});
  CHECK(rep.n == 3);
  CHECK(rep.k == 1);
  CHECK_FALSE(rep.dependent_generators);

  const auto five = code_of({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ", "ZZXIX"});
  CHECK(five.rank == 4);
  CHECK(five.k == 1);
  CHECK(five.dependent_generators);
  CHECK(five.generators.size() == 5);

  CHECK_THROWS_AS(build_code({}), InputError);
  CHECK_THROWS_AS(code_of({"ZZ", "ZZZ"}), InputError);
  try {
    code_of({"ZZ", "XI"});
    FAIL("expected an anticommutation error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("0") != std::string::npos);
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }
}

TEST_CASE("code distance") {
  CHECK(code_distance(builtin_family(CodeFamily::five_qubit)) == 3);
  CHECK(code_distance(builtin_family(CodeFamily::steane)) == 3);
  CHECK(code_distance(code_of({"ZZI", "IZZ"})) == 1);
  CHECK(code_distance(builtin_family(CodeFamily::rotated_surface, 3)) == 3);
  CHECK(code_distance(builtin_family(CodeFamily::toric, 2)) == 2);
  CHECK_THROWS_AS(code_distance(code_of({"ZI", "IZ"})), InputError);
  CHECK_THROWS_AS(code_distance(builtin_family(CodeFamily::rotated_surface, 5), 12),
                  CapExceeded);
}

TEST_CASE("builtin families") {
  const auto rs3 = builtin_family(CodeFamily::rotated_surface, 3);
  CHECK(rs3.n == 9);
  CHECK(rs3.k == 1);
  CHECK(rs3.generators.size() == 8);
  for (int L : {3, 5, 7}) {
    const auto rs = builtin_family(CodeFamily::rotated_surface, L);
    CHECK(rs.n == L * L);
    CHECK(rs.k == 1);
  }
  for (int L : {2, 3, 4}) {
    const auto t = builtin_family(CodeFamily::toric, L);
    CHECK(t.n == 2 * L * L);
    CHECK(t.k == 2);
  }
  const auto rep = builtin_family(CodeFamily::repetition, 3);
  REQUIRE(rep.generators.size() == 2);
  CHECK(rep.generators[0].to_string() == "ZZI");
  CHECK(rep.generators[1].to_string() == "IZZ");
  CHECK(builtin_family(CodeFamily::steane).k == 1);
  CHECK_THROWS_AS(builtin_family(CodeFamily::rotated_surface, 4), InputError);
  CHECK_THROWS_AS(builtin_family(CodeFamily::rotated_surface, 1), InputError);
  CHECK_THROWS_AS(builtin_family(CodeFamily::toric, 1), InputError);
  CHECK_THROWS_AS(parse_code_family("hexagonal"), InputError);
  CHECK(parse_code_family("five_qubit") == CodeFamily::five_qubit);
}

TEST_CASE("code correctability examples") {
  const auto five = builtin_family(CodeFamily::five_qubit);
  CHECK(is_code_correctable(five, VertexSet(5, {0, 1})));
  CHECK_FALSE(is_code_correctable(five, VertexSet::full(5)));
  const auto steane = builtin_family(CodeFamily::steane);
  int pairs = 0;
  for (int a = 0; a < 7; ++a) {
    for (int b = a + 1; b < 7; ++b) {
      CHECK(is_code_correctable(steane, VertexSet(7, {a, b})));
      ++pairs;
    }
  }
  CHECK(pairs == 21);
  CHECK_THROWS_AS(is_code_correctable(five, VertexSet(6, {0})), InputError);
}

TEST_CASE("rank criterion agrees with the enumeration oracle") {
  for (const auto& code : small_codes()) {
    CAPTURE(code.name);
    const oracle::CodeOracle ref(code);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << code.n); ++m) {
      REQUIRE(is_code_correctable(code, VertexSet::from_mask(code.n, m)) == ref.correctable(m));
    }
    CHECK(code_distance(code) == ref.distance());
  }
}

TEST_CASE("correctability properties on small codes") {
  for (const auto& code : small_codes()) {
    CAPTURE(code.name);
    const int n = code.n;
    const int d = code_distance(code);
    std::vector<bool> ok(std::size_t{1} << n);
    for (std::uint64_t m = 0; m < ok.size(); ++m) {
      ok[m] = is_code_correctable(code, VertexSet::from_mask(n, m));
    }
    CHECK(ok[0]);
    CHECK_FALSE(ok[ok.size() - 1]);
    int smallest_bad = n + 1;
    for (std::uint64_t m = 0; m < ok.size(); ++m) {
      if (std::popcount(m) < d) CHECK(ok[m]);
      if (!ok[m]) smallest_bad = std::min(smallest_bad, std::popcount(m));
      if (ok[m]) {
        for (std::uint64_t sub = m; sub; sub = (sub - 1) & m) CHECK(ok[sub]);
      }
    }
    CHECK(smallest_bad == d);
  }
}

TEST_CASE("code file round trip and diagnostics") {
  const auto code = builtin_family(CodeFamily::steane);
  std::ostringstream out;
  write_code(out, code);
  std::istringstream in(out.str());
  const auto back = read_code(in);
  CHECK(back.name == code.name);
  CHECK(back.generators == code.generators);
  CHECK(back.generator_hash() == code.generator_hash());

  std::istringstream commented("# demo\n\nZZI\n# note\nIZZ\n");
  const auto rep = read_code(commented);
  CHECK(rep.name == "demo");
  CHECK(rep.k == 1);

  std::istringstream bad("ZZI\nIZQ\n");
  try {
    read_code(bad);
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::istringstream ragged("ZZI\nIZ\n");
  CHECK_THROWS_AS(read_code(ragged), InputError);
}
