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

#include "doctest.h"
#include "qsep/certificate.hpp"
#include "qsep/errors.hpp"

using namespace qsep;

namespace {

VertexSet S(int n, std::initializer_list<int> v) { return VertexSet(n, v); }

}  // namespace

TEST_CASE("certificate checker examples") {
  const auto g = path_graph(3);
  CHECK(check_certificate(g, 3, make_certificate(g, 3, distance_leaf(S(3, {0, 1})))).ok);
  const auto good = union_node({distance_leaf(S(3, {0})), distance_leaf(S(3, {2}))});
  CHECK(good.target == S(3, {0, 2}));
  CHECK(check_certificate(g, 2, make_certificate(g, 2, good)).ok);
  const auto bad = union_node({distance_leaf(S(3, {0})), distance_leaf(S(3, {1}))});
  const auto res = check_certificate(g, 2, make_certificate(g, 2, bad));
  CHECK_FALSE(res.ok);
  CHECK(res.path == "root");
  CHECK(res.reason.find("adjacent") != std::string::npos);
}

TEST_CASE("expansion and trivial rules") {
  const auto g = path_graph(3);
  const auto e01 = expansion_node(distance_leaf(S(3, {0})), distance_leaf(S(3, {1})));
  CHECK(e01.target == S(3, {0, 1}));
  const auto e012 = expansion_node(e01, distance_leaf(S(3, {2})));
  const auto cert = make_certificate(g, 2, e012);
  const auto ok = check_certificate(g, 2, cert);
  CHECK(ok.ok);
  CHECK(ok.nodes_checked == 5);
  CHECK(count_nodes(e012) == 5);

  const auto missing = expansion_node(distance_leaf(S(3, {1})), distance_leaf(S(3, {0})));
  const auto r = check_certificate(g, 2, make_certificate(g, 2, missing));
  CHECK_FALSE(r.ok);
  CHECK(r.reason.find("Expansion") != std::string::npos);

  const auto t = trivial_node(S(3, {1}), e01);
  CHECK(check_certificate(g, 2, make_certificate(g, 2, t)).ok);
  const auto t_bad = trivial_node(S(3, {2}), e01);
  CHECK_FALSE(check_certificate(g, 2, make_certificate(g, 2, t_bad)).ok);
}

TEST_CASE("failure path points at the offending node") {
  const auto g = path_graph(4);
  const auto inner = distance_leaf(S(4, {0, 1, 2}));
  const auto root = expansion_node(distance_leaf(S(4, {3})), inner);
  const auto r = check_certificate(g, 3, make_certificate(g, 3, root));
  CHECK_FALSE(r.ok);
  CHECK(r.path == "root/1");
  CHECK(r.reason.find("Distance") != std::string::npos);
}

TEST_CASE("structural errors") {
  const auto g = path_graph(3);
  CertNode odd{Rule::distance, S(3, {0}), {distance_leaf(S(3, {}))}};
  CHECK_FALSE(check_certificate(g, 2, make_certificate(g, 2, odd)).ok);
  CertNode lone_union{Rule::union_of, S(3, {0}), {distance_leaf(S(3, {0}))}};
  CHECK_FALSE(check_certificate(g, 2, make_certificate(g, 2, lone_union)).ok);
  CertNode overlap{Rule::union_of, S(3, {0}), {distance_leaf(S(3, {0})), distance_leaf(S(3, {0}))}};
  CHECK_FALSE(check_certificate(g, 2, make_certificate(g, 2, overlap)).ok);
  CertNode wrong_target{Rule::union_of, S(3, {0, 1, 2}),
                        {distance_leaf(S(3, {0})), distance_leaf(S(3, {2}))}};
  CHECK_FALSE(check_certificate(g, 2, make_certificate(g, 2, wrong_target)).ok);
  CertNode wrong_universe{Rule::distance, S(4, {0}), {}};
  CHECK_FALSE(check_certificate(g, 2, make_certificate(g, 2, wrong_universe)).ok);
}

TEST_CASE("provenance binding") {
  const auto g = path_graph(3);
  auto cert = make_certificate(g, 2, distance_leaf(S(3, {0})));
  CHECK_THROWS_AS(check_certificate(g, 2, Certificate{2, "0123456789abcdef", cert.root}),
                  ProvenanceError);
  CHECK_THROWS_AS(check_certificate(complete_graph(3), 2, cert), ProvenanceError);
  const auto r = check_certificate(g, 3, cert);
  CHECK_FALSE(r.ok);
  CHECK(r.reason.find("d") != std::string::npos);
}

TEST_CASE("union_or_single") {
  CHECK(union_or_single({}, 4).rule == Rule::distance);
  CHECK(union_or_single({}, 4).target.empty());
  CHECK(union_or_single({distance_leaf(S(4, {1}))}, 4).rule == Rule::distance);
  CHECK(union_or_single({distance_leaf(S(4, {1})), distance_leaf(S(4, {3}))}, 4).rule ==
        Rule::union_of);
}
