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
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "qsep/errors.hpp"
#include "qsep/graph.hpp"

using namespace qsep;

namespace {

StabilizerCode code_of(std::initializer_list<const char*> words) {
  std::vector<PauliWord> gens;
  for (auto* w : words) gens.push_back(parse_pauli(w));
  return build_code(gens);
}

}  // namespace

TEST_CASE("build_graph examples") {
  const auto path = build_graph(builtin_family(CodeFamily::repetition, 3));
  CHECK(path.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(build_graph(code_of({"ZZZZZ"})) == complete_graph(5));
  CHECK(build_graph(code_of({"ZI", "IZ"})).num_edges() == 0);
  CHECK(path.provenance().generator_hash != 0);
}

TEST_CASE("build_graph matches the pairwise oracle") {
  for (auto code : {builtin_family(CodeFamily::steane), builtin_family(CodeFamily::five_qubit),
                    builtin_family(CodeFamily::rotated_surface, 5),
                    builtin_family(CodeFamily::toric, 3)}) {
    CAPTURE(code.name);
    CHECK(build_graph(code).edges() == oracle::naive_edges(code));
  }
}

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(ConnGraph(3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(ConnGraph(3, {{0, 3}}), InputError);
  const ConnGraph g(4, {{2, 1}, {1, 2}, {0, 3}});
  CHECK(g.num_edges() == 2);
  CHECK(g.neighbors(1) == std::vector<int>{2});
  CHECK(g.has_edge(3, 0));
  CHECK(g.max_degree() == 1);
}

TEST_CASE("boundaries") {
  const auto p3 = path_graph(3);
  CHECK(outer_boundary(p3, VertexSet(3, {0})).to_vector() == std::vector<int>{1});
  CHECK(outer_boundary(p3, p3.all()).empty());
  CHECK(inner_boundary(p3, VertexSet(3, {0, 1})).to_vector() == std::vector<int>{1});
  CHECK(inner_boundary(p3, p3.empty_set()).empty());
  const auto grid = grid_graph(3, 3);
  CHECK(outer_boundary(grid, VertexSet(9, {4})).to_vector() == std::vector<int>{1, 3, 5, 7});
  CHECK(inner_boundary(grid, VertexSet(9, {0, 3, 6})).to_vector() ==
        std::vector<int>{0, 3, 6});
  CHECK_THROWS_AS(outer_boundary(grid, VertexSet(8)), InputError);
}

TEST_CASE("boundary properties on random sets") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const auto g = oracle::random_graph(n, 0.15, rng);
    VertexSet u(n);
    for (int v = 0; v < n; ++v) {
      if (rng() & 1) u.insert(v);
    }
    const auto out = outer_boundary(g, u);
    const auto in = inner_boundary(g, u);
    CHECK_FALSE(out.intersects(u));
    CHECK(in.is_subset_of(u));
    CHECK(in == outer_boundary(g, g.all() - u));
    if (n <= 64) CHECK(oracle::to_mask(out) == oracle::outer(oracle::adjacency_masks(g),
                                                              oracle::to_mask(u)));
  }
}

TEST_CASE("induced subgraphs and components") {
  const auto p3 = path_graph(3);
  const auto sub = induced_subgraph(p3, VertexSet(3, {0, 2}));
  CHECK(sub.graph.num_vertices() == 2);
  CHECK(sub.graph.num_edges() == 0);
  CHECK(sub.to_parent == std::vector<int>{0, 2});
  const auto comps = components(sub.graph);
  REQUIRE(comps.size() == 2);
  CHECK(sub.lift(comps[0], 3).to_vector() == std::vector<int>{0});
  CHECK(sub.lift(comps[1], 3).to_vector() == std::vector<int>{2});
  CHECK(are_disconnected(p3, VertexSet(3, {0}), VertexSet(3, {2})));
  CHECK_FALSE(are_disconnected(p3, VertexSet(3, {0}), VertexSet(3, {1})));
  CHECK_THROWS_AS(are_disconnected(p3, VertexSet(3, {0, 1}), VertexSet(3, {1})), InputError);

  const ConnGraph g(6, {{4, 5}, {0, 3}, {1, 2}});
  const auto cs = components(g);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0].to_vector() == std::vector<int>{0, 3});
  CHECK(cs[1].to_vector() == std::vector<int>{1, 2});
  CHECK(cs[2].to_vector() == std::vector<int>{4, 5});
  const auto within = components_within(grid_graph(3, 3), VertexSet(9, {0, 2, 1, 8}));
  REQUIRE(within.size() == 2);
  CHECK(within[0].to_vector() == std::vector<int>{0, 1, 2});
}

TEST_CASE("edge list round trip and diagnostics") {
  const auto g = grid_graph(4, 5);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream in(out.str());
  const auto back = read_edge_list(in);
  CHECK(back == g);
  CHECK(back.hash() == g.hash());
  CHECK(out.str().rfind("20 31\n", 0) == 0);

  std::istringstream bad("3 2\n0 1\n1 x\n");
  try {
    read_edge_list(bad);
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  std::istringstream range("3 1\n0 5\n");
  CHECK_THROWS_AS(read_edge_list(range), InputError);
  std::istringstream count("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(count), InputError);

  std::ostringstream dot;
  write_dot(dot, path_graph(3));
  CHECK(dot.str().find("0 -- 1") != std::string::npos);
}

TEST_CASE("graph hash tracks the edge set") {
  CHECK(path_graph(5).hash() == path_graph(5).hash());
  CHECK(path_graph(5).hash() != grid_graph(1, 6).hash());
  CHECK(path_graph(5).hash().size() == 16);
  CHECK(path_graph(5) == grid_graph(1, 5));
}
