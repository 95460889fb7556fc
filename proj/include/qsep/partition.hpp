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

#include <optional>
#include <string>
#include <vector>

#include "qsep/certificate.hpp"
#include "qsep/graph.hpp"
#include "qsep/separator.hpp"
#include "qsep/vertex_set.hpp"

namespace qsep {

struct SeparatorTreeNode {
  VertexSet set;
  // S(U) = set - (child0 + child1); empty at leaves.
  VertexSet separator;
  int child0 = -1;
  int child1 = -1;
  int parent = -1;
  // Whether exact_separator (rather than the heuristic) split this node.
  bool exact = false;

  bool is_leaf() const { return child0 < 0; }
};

// Recursive balanced-separator decomposition. nodes[0] is the root; every
// node of size >= threshold is split, every leaf has size < threshold.
struct SeparatorTree {
  int threshold = 1;
  std::vector<SeparatorTreeNode> nodes;

  std::vector<int> leaves() const;
  int depth() const;
};

// Splits on the subgraph induced by each node's set, using exact_separator
// up to `exact_cap` vertices and heuristic_separator above.
SeparatorTree build_separator_tree(const ConnGraph& g, int threshold, const VertexSet& root,
                                   int exact_cap = kDefaultExactSeparatorCap);
SeparatorTree build_separator_tree(const ConnGraph& g, int threshold,
                                   int exact_cap = kDefaultExactSeparatorCap);

// Independent re-check of every structural invariant; returns violations.
std::vector<std::string> audit_separator_tree(const ConnGraph& g, const SeparatorTree& tree);

struct LeavesPartition {
  VertexSet a;        // union of leaves
  VertexSet removed;  // union of internal separators
  std::vector<VertexSet> leaves;  // nonempty leaves in tree order
};

LeavesPartition leaves_partition(const SeparatorTree& tree);

// Parameters shared by the constructive producers. epsilon defaults to
// (1 - (2/3)^c) / (20 beta).
struct LemmaParams {
  double beta = 1.0;
  double c = 0.5;
  std::optional<double> epsilon;
  int exact_cap = kDefaultExactSeparatorCap;

  double effective_epsilon() const;
};

double default_epsilon(double beta, double c);
// (epsilon * d)^(1/c).
double region_size_limit(int d, double epsilon, double c);
// Throws InputError unless beta > 0 and 0 < c < 1.
void validate_profile_params(double beta, double c);

// Certificate that W is d-correctable, built by splitting W with separators
// until pieces are smaller than d and folding back up with Union, Expansion
// (absorbing the outer boundary of the two children plus the node's
// separator, certified by Distance) and Trivial.
//
// Requires |W| <= (epsilon d)^(1/c) and |outer boundary of W| <= d/4; throws
// CertificationError when a precondition fails, when an internal node's outer
// boundary reaches d/3, or when an absorbed boundary is not smaller than d.
Certificate certify_small_boundary_set(const ConnGraph& g, int d, const VertexSet& region,
                                       const LemmaParams& params);

struct RDivision {
  int r = 0;
  std::vector<VertexSet> parts;
  std::vector<int> inner_boundary_sizes;
  int max_inner_boundary = 0;
  // max |inner boundary| / (beta r^c) and l r / n.
  double alpha_boundary = 0.0;
  double alpha_count = 0.0;

  bool operator==(const RDivision&) const = default;
};

// Splits with separators until every part has at most r vertices, then hands
// each separator vertex to the lowest-index adjacent part with room (or a new
// part), so the parts partition V.
RDivision r_division(const ConnGraph& g, int r, double beta, double c,
                     int exact_cap = kDefaultExactSeparatorCap);

struct BigCorrectableSet {
  VertexSet a;
  VertexSet removed;
  Certificate certificate;
  RDivision division;
  double epsilon = 0.0;
  // (epsilon d)^(1/c) rounded down; 0 when the construction is vacuous.
  int r = 0;
  // 1 / (4 beta alpha_div) measured on this division.
  double epsilon_division_bound = 0.0;
};

// Strips the inner boundary from every part of an r-division with
// r = (epsilon d)^(1/c), certifies each stripped part and unions them.
// Without an epsilon override, epsilon starts at the default and is lowered
// to 1 / (4 beta alpha_div) until the two agree. Throws CertificationError
// (with the part index) when a part fails.
BigCorrectableSet big_correctable_set(const ConnGraph& g, int d, const LemmaParams& params);

struct TradeoffPartition {
  std::string method;  // "main", "warmup" or "exact"
  int d = 0;
  double beta = 0.0;
  double c = 0.0;
  double epsilon = 0.0;
  VertexSet a;
  VertexSet b;
  VertexSet c_set;
  Certificate cert_a;
  Certificate cert_b;
  // |V \ A| after the first stage.
  int first_stage_removed = 0;

  bool operator==(const TradeoffPartition&) const = default;
};

// A from big_correctable_set; B the leaves of a threshold-d separator tree on
// G[V \ A]; C the separators of that tree.
TradeoffPartition abc_partition(const ConnGraph& g, int d, const LemmaParams& params);

// Two rounds of separator-tree leaves: A on G, B on G[V \ A].
TradeoffPartition warmup_abc_partition(const ConnGraph& g, int d,
                                       int exact_cap = kDefaultExactSeparatorCap);

// Union of Distance leaves over pairwise disconnected sets each smaller
// than d.
CertNode certify_small_pieces(const ConnGraph& g, int d, const std::vector<VertexSet>& pieces);

}  // namespace qsep
