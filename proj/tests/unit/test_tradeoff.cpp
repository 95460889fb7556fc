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

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "qsep/errors.hpp"
#include "qsep/family.hpp"
#include "qsep/tradeoff.hpp"

using namespace qsep;

namespace {

LemmaParams params(double beta, double c, std::optional<double> eps = std::nullopt) {
  LemmaParams p;
  p.beta = beta;
  p.c = c;
  p.epsilon = eps;
  return p;
}

}  // namespace

TEST_CASE("exponents") {
  CHECK(exponent_warmup(0.5) == doctest::Approx(1.0));
  CHECK(exponent_main(0.5) == doctest::Approx(1.5));
  CHECK(exponent_conjecture(0.5) == doctest::Approx(2.0));
  CHECK(size_ratio(4, 3, 9, 2.0) == doctest::Approx(4.0));
}

TEST_CASE("k bound on rotated surface code") {
  const auto code = builtin_family(CodeFamily::rotated_surface, 3);
  const auto g = build_graph(code);
  const auto p = abc_partition(g, 3, params(1, 0.5));
  const auto report = verify_k_bound(code, p);
  CHECK(report.k == 1);
  CHECK(report.is_partition);
  CHECK(report.cert_a_valid);
  CHECK(report.cert_b_valid);
  REQUIRE(report.a_code_correctable.has_value());
  CHECK(*report.a_code_correctable);
  CHECK(*report.b_code_correctable);
  CHECK(report.verdict() == Verdict::pass);
  CHECK(report.size_c >= 1);
}

TEST_CASE("trivial partition of the five qubit code") {
  const auto code = builtin_family(CodeFamily::five_qubit);
  const auto g = build_graph(code);
  TradeoffPartition p;
  p.method = "manual";
  p.d = 3;
  p.c = 0.5;
  p.a = VertexSet(5);
  p.b = VertexSet(5);
  p.c_set = g.all();
  p.cert_a = make_certificate(g, 3, distance_leaf(VertexSet(5)));
  p.cert_b = p.cert_a;
  const auto report = verify_k_bound(code, p);
  CHECK(report.verdict() == Verdict::pass);
  CHECK(report.size_c == 5);
}

TEST_CASE("corrupted certificate makes the verdict indeterminate") {
  const auto code = builtin_family(CodeFamily::steane);
  const auto g = build_graph(code);
  auto p = warmup_abc_partition(g, 3);
  p.cert_a.root = distance_leaf(g.all());
  p.a = g.all();
  p.b = VertexSet(7);
  p.c_set = VertexSet(7);
  p.cert_b = make_certificate(g, 3, distance_leaf(VertexSet(7)));
  const auto report = verify_k_bound(code, p);
  CHECK_FALSE(report.cert_a_valid);
  CHECK(report.verdict() == Verdict::indeterminate);
  CHECK_FALSE(report.cert_failure.empty());
}

TEST_CASE("k bound holds on toric codes") {
  for (int L : {2, 3, 4}) {
    const auto code = builtin_family(CodeFamily::toric, L);
    const auto g = build_graph(code);
    for (const auto& p : {warmup_abc_partition(g, L), abc_partition(g, L, params(1, 0.5))}) {
      const auto report = verify_k_bound(code, p);
      CHECK(report.cert_a_valid);
      CHECK(report.cert_b_valid);
      CHECK(report.verdict() == Verdict::pass);
      CHECK(report.k == 2);
    }
  }
}

TEST_CASE("distance bound check") {
  const auto rep = builtin_family(CodeFamily::repetition, 3);
  const auto r1 = distance_bound_check(rep, params(1, 0.5));
  CHECK(r1.d == 1);
  CHECK_FALSE(r1.contradiction());

  const auto rep9 = builtin_family(CodeFamily::repetition, 9);
  const auto claimed = distance_bound_check(rep9, params(1, 0.1, 0.5), 5);
  CHECK(claimed.certified);
  CHECK(claimed.certificate_valid);
  CHECK(claimed.contradiction());

  const auto rs = builtin_family(CodeFamily::rotated_surface, 3);
  const auto ok = distance_bound_check(rs, params(3, 0.5));
  CHECK(ok.d == 3);
  CHECK_FALSE(ok.contradiction());
  CHECK(ok.distance_ratio() == doctest::Approx(1.0));

  CHECK_THROWS_AS(distance_bound_check(build_code({parse_pauli("ZI"), parse_pauli("IZ")}),
                                       params(1, 0.5)),
                  InputError);
}

TEST_CASE("d rules and families") {
  CHECK(parse_d_rule("L").eval(7) == 7);
  CHECK(parse_d_rule("4").eval(7) == 4);
  CHECK(parse_d_rule("const:3").eval(9) == 3);
  CHECK_THROWS_AS(parse_d_rule("2L"), InputError);
  CHECK_THROWS_AS(parse_d_rule("0"), InputError);
  CHECK(parse_scaling_family("toric") == ScalingFamily::toric);
  CHECK_THROWS_AS(parse_scaling_family("hex"), InputError);
}

TEST_CASE("scaling experiment rows") {
  const auto one = scaling_experiment(ScalingFamily::grid_graph, {6}, parse_d_rule("L"),
                                      params(1, 0.5));
  REQUIRE(one.size() == 2);
  CHECK(one[0].method == "warmup");
  CHECK(one[1].method == "main");
  const auto csv = scaling_csv(one);
  CHECK(csv.rfind(std::string(kScalingCsvHeader) + "\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

  const auto toric = scaling_experiment(ScalingFamily::toric, {2, 3, 4}, parse_d_rule("L"),
                                        params(1, 0.5), 3);
  REQUIRE(toric.size() == 6);
  for (const auto& row : toric) {
    CHECK(row.status == "ok");
    REQUIRE(row.k.has_value());
    CHECK(*row.k <= row.size_c);
  }
  CHECK(scaling_csv(toric) == scaling_csv(scaling_experiment(
                                  ScalingFamily::toric, {2, 3, 4}, parse_d_rule("L"),
                                  params(1, 0.5), 1)));

  const auto bad = scaling_experiment(ScalingFamily::rotated_surface, {3, 4}, parse_d_rule("L"),
                                      params(1, 0.5));
  REQUIRE(bad.size() == 3);
  CHECK(bad[2].status.rfind("error", 0) == 0);
}

TEST_CASE("conjecture search") {
  const auto p = path_graph(6);
  const auto trivial = conjecture_search(p, 7, 0.5, SearchMode::exact, 0);
  CHECK(trivial.best_c == 0);
  REQUIRE(trivial.best.has_value());
  CHECK(trivial.best->a == p.all());

  const auto p8 = conjecture_search(path_graph(8), 2, 0.5, SearchMode::exact, 0);
  CHECK(p8.best_c == 0);

  const auto g = grid_graph(3, 3);
  const auto exact = conjecture_search(g, 3, 0.5, SearchMode::exact, 1);
  CHECK(exact.conjectured_scale == doctest::Approx(1.0));
  REQUIRE(exact.best.has_value());
  CHECK(check_certificate(g, 3, exact.best->cert_a).ok);
  CHECK(check_certificate(g, 3, exact.best->cert_b).ok);
  const auto heuristic = conjecture_search(g, 3, 0.5, SearchMode::heuristic, 1);
  CHECK(exact.best_c <= heuristic.best_c);
  CHECK(heuristic.best.has_value());
  CHECK_FALSE(exact.label().empty());

  CHECK_THROWS_AS(conjecture_search(grid_graph(4, 4), 3, 0.5, SearchMode::exact, 0),
                  CapExceeded);
  CHECK_THROWS_AS(conjecture_search(g, 3, 1.0, SearchMode::exact, 0), InputError);
}
