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

#include "qsep/partition.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "qsep/errors.hpp"

namespace qsep {

std::vector<int> SeparatorTree::leaves() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (nodes[i].is_leaf()) out.push_back(i);
  }
  return out;
}

int SeparatorTree::depth() const {
  int best = 0;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    int dep = 0;
    for (int p = nodes[i].parent; p >= 0; p = nodes[p].parent) ++dep;
    best = std::max(best, dep);
  }
  return best;
}

SeparatorTree build_separator_tree(const ConnGraph& g, int threshold, const VertexSet& root,
                                   int exact_cap) {
  if (threshold < 1) throw InputError("separator tree threshold must be >= 1");
  if (root.universe() != g.num_vertices()) throw InputError("root set universe mismatch");
  SeparatorTree tree;
  tree.threshold = threshold;
  tree.nodes.push_back(SeparatorTreeNode{root, g.empty_set()});
  // Breadth-first, so node indices are independent of split order details.
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    if (tree.nodes[i].set.size() < threshold) continue;
    const auto sub = induced_subgraph(g, tree.nodes[i].set);
    bool exact = false;
    const auto sep = find_separator(sub.graph, exact_cap, &exact);
    if (!verify_separator(sub.graph, sep).valid) {
      throw std::logic_error("build_separator_tree: separator routine returned an invalid split");
    }
    const int n = g.num_vertices();
    VertexSet u0 = sub.lift(sep.u1, n);
    VertexSet u1 = sub.lift(sep.u2, n);
    VertexSet s = sub.lift(sep.t, n);
    const int self = static_cast<int>(i);
    tree.nodes[i].separator = std::move(s);
    tree.nodes[i].exact = exact;
    tree.nodes[i].child0 = static_cast<int>(tree.nodes.size());
    tree.nodes[i].child1 = tree.nodes[i].child0 + 1;
    tree.nodes.push_back(SeparatorTreeNode{std::move(u0), g.empty_set(), -1, -1, self});
    tree.nodes.push_back(SeparatorTreeNode{std::move(u1), g.empty_set(), -1, -1, self});
  }
  return tree;
}

SeparatorTree build_separator_tree(const ConnGraph& g, int threshold, int exact_cap) {
  return build_separator_tree(g, threshold, g.all(), exact_cap);
}

std::vector<std::string> audit_separator_tree(const ConnGraph& g, const SeparatorTree& tree) {
  std::vector<std::string> issues;
  auto where = [](std::size_t i) { return "node " + std::to_string(i) + ": "; };
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& node = tree.nodes[i];
    const int size = node.set.size();
    if (node.is_leaf()) {
      if (size >= tree.threshold) issues.push_back(where(i) + "leaf at or above threshold");
      if (!node.separator.empty()) issues.push_back(where(i) + "leaf carries a separator");
      continue;
    }
    if (size < tree.threshold) issues.push_back(where(i) + "internal node below threshold");
    const auto& a = tree.nodes[node.child0];
    const auto& b = tree.nodes[node.child1];
    if (a.parent != static_cast<int>(i) || b.parent != static_cast<int>(i)) {
      issues.push_back(where(i) + "child parent link broken");
    }
    if (a.set.intersects(b.set) || a.set.intersects(node.separator) ||
        b.set.intersects(node.separator)) {
      issues.push_back(where(i) + "children and separator not disjoint");
    }
    if (!((a.set | b.set | node.separator) == node.set)) {
      issues.push_back(where(i) + "children and separator do not cover the node");
    }
    if (3 * a.set.size() > 2 * size || 3 * b.set.size() > 2 * size) {
      issues.push_back(where(i) + "child larger than 2/3 of parent");
    }
    if (!a.set.intersects(b.set) && !are_disconnected(g, a.set, b.set)) {
      issues.push_back(where(i) + "children are adjacent");
    }
  }
  return issues;
}

LeavesPartition leaves_partition(const SeparatorTree& tree) {
  const int n = tree.nodes.front().set.universe();
  LeavesPartition out{VertexSet(n), VertexSet(n), {}};
  for (const auto& node : tree.nodes) {
    if (node.is_leaf()) {
      out.a |= node.set;
      if (!node.set.empty()) out.leaves.push_back(node.set);
    } else {
      out.removed |= node.separator;
    }
  }
  return out;
}

double default_epsilon(double beta, double c) {
  return (1.0 - std::pow(2.0 / 3.0, c)) / (20.0 * beta);
}

double LemmaParams::effective_epsilon() const {
  return epsilon ? *epsilon : default_epsilon(beta, c);
}

double region_size_limit(int d, double epsilon, double c) {
  return std::pow(epsilon * d, 1.0 / c);
}

void validate_profile_params(double beta, double c) {
  if (!(beta > 0.0)) throw InputError("beta must be positive");
  if (!(c > 0.0)) throw InputError("c must be positive");
  if (c >= 1.0) {
    throw InputError("c must be < 1: at c = 1 the trade-off bounds are vacuous");
  }
}

namespace {

// Integer floor of (epsilon d)^(1/c), tolerant of rounding when the value is
// meant to be an exact integer.
long long size_limit_floor(int d, double epsilon, double c) {
  const double limit = region_size_limit(d, epsilon, c);
  if (!std::isfinite(limit) || limit > 1e15) return static_cast<long long>(1e15);
  return static_cast<long long>(std::floor(limit * (1.0 + 1e-12) + 1e-9));
}

CertNode emit_lemma_node(const ConnGraph& g, int d, const SeparatorTree& tree, int index) {
  const auto& node = tree.nodes[index];
  if (node.is_leaf()) return distance_leaf(node.set);
  CertNode left = emit_lemma_node(g, d, tree, node.child0);
  CertNode right = emit_lemma_node(g, d, tree, node.child1);
  const VertexSet joined = tree.nodes[node.child0].set | tree.nodes[node.child1].set;
  // Separator vertices with no neighbor in either child are not in the
  // children's boundary, so absorb S(U) explicitly.
  VertexSet absorbed = outer_boundary(g, joined) | node.separator;
  if (absorbed.size() >= d) {
    throw CertificationError("node " + std::to_string(index) + ": absorbed boundary of size " +
                             std::to_string(absorbed.size()) + " is not < d = " +
                             std::to_string(d));
  }
  std::vector<CertNode> halves;
  halves.push_back(std::move(left));
  halves.push_back(std::move(right));
  CertNode grown = expansion_node(union_node(std::move(halves)), distance_leaf(std::move(absorbed)));
  if (grown.target == node.set) return grown;
  return trivial_node(node.set, std::move(grown));
}

}  // namespace

Certificate certify_small_boundary_set(const ConnGraph& g, int d, const VertexSet& region,
                                       const LemmaParams& params) {
  validate_profile_params(params.beta, params.c);
  if (d < 1) throw InputError("d must be >= 1");
  const double eps = params.effective_epsilon();
  if (!(eps > 0.0)) throw InputError("epsilon must be positive");
  if (region.universe() != g.num_vertices()) throw InputError("region universe mismatch");
  const long long limit = size_limit_floor(d, eps, params.c);
  if (region.size() > limit) {
    throw CertificationError("|W| = " + std::to_string(region.size()) +
                             " exceeds (epsilon d)^(1/c) = " +
                             std::to_string(region_size_limit(d, eps, params.c)));
  }
  const int boundary = outer_boundary(g, region).size();
  if (4 * boundary > d) {
    throw CertificationError("|outer boundary of W| = " + std::to_string(boundary) +
                             " exceeds d/4 = " + std::to_string(d / 4.0));
  }
  const SeparatorTree tree = build_separator_tree(g, d, region, params.exact_cap);
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& node = tree.nodes[i];
    if (node.is_leaf()) continue;
    const int b = outer_boundary(g, node.set).size();
    if (3 * b >= d) {
      throw CertificationError("node " + std::to_string(i) + ": outer boundary " +
                               std::to_string(b) + " is not < d/3 (epsilon too aggressive?)");
    }
  }
  return make_certificate(g, d, emit_lemma_node(g, d, tree, 0));
}

RDivision r_division(const ConnGraph& g, int r, double beta, double c, int exact_cap) {
  const int n = g.num_vertices();
  if (r < 1 || r > std::max(n, 1)) {
    throw InputError("r_division needs 1 <= r <= n (got r = " + std::to_string(r) + ")");
  }
  RDivision div;
  div.r = r;
  const SeparatorTree tree = build_separator_tree(g, r + 1, exact_cap);
  std::vector<int> owner(n, -1);
  for (const auto& node : tree.nodes) {
    if (!node.is_leaf() || node.set.empty()) continue;
    const int idx = static_cast<int>(div.parts.size());
    node.set.for_each([&](int v) { owner[v] = idx; });
    div.parts.push_back(node.set);
  }
  std::vector<int> pending;
  for (int v = 0; v < n; ++v) {
    if (owner[v] < 0) pending.push_back(v);
  }
  while (!pending.empty()) {
    std::vector<int> left;
    for (int v : pending) {
      int target = -1;
      for (int w : g.neighbors(v)) {
        const int p = owner[w];
        if (p >= 0 && div.parts[p].size() < r && (target < 0 || p < target)) target = p;
      }
      if (target >= 0) {
        owner[v] = target;
        div.parts[target].insert(v);
      } else {
        left.push_back(v);
      }
    }
    if (left.size() == pending.size()) {
      // No vertex could join an existing part: open a new one.
      const int v = left.front();
      owner[v] = static_cast<int>(div.parts.size());
      div.parts.push_back(VertexSet(n, {v}));
      left.erase(left.begin());
    }
    pending = std::move(left);
  }
  for (const auto& part : div.parts) {
    const int b = inner_boundary(g, part).size();
    div.inner_boundary_sizes.push_back(b);
    div.max_inner_boundary = std::max(div.max_inner_boundary, b);
  }
  const double scale = beta * std::pow(static_cast<double>(r), c);
  div.alpha_boundary = scale > 0 ? div.max_inner_boundary / scale : 0.0;
  div.alpha_count = n > 0 ? static_cast<double>(div.parts.size()) * r / n : 0.0;
  return div;
}

BigCorrectableSet big_correctable_set(const ConnGraph& g, int d, const LemmaParams& params) {
  validate_profile_params(params.beta, params.c);
  if (d < 1) throw InputError("d must be >= 1");
  const int n = g.num_vertices();
  BigCorrectableSet out;
  out.epsilon = params.effective_epsilon();
  if (!(out.epsilon > 0.0)) throw InputError("epsilon must be positive");
  // Without an override, epsilon is min(eps', 1/(4 beta alpha_div)). The
  // division constant depends on r, which depends on epsilon, so shrink
  // epsilon until it is consistent with the division it produces.
  while (true) {
    const long long limit = size_limit_floor(d, out.epsilon, params.c);
    out.r = static_cast<int>(std::min<long long>(limit, std::max(n, 1)));
    if (limit < 1 || n == 0) {
      out.r = 0;
      out.division = RDivision{};
      out.a = g.empty_set();
      out.removed = g.all();
      out.certificate = make_certificate(g, d, distance_leaf(g.empty_set()));
      return out;
    }
    out.division = r_division(g, out.r, params.beta, params.c, params.exact_cap);
    out.epsilon_division_bound =
        out.division.alpha_boundary > 0 ? 1.0 / (4.0 * params.beta * out.division.alpha_boundary)
                                        : INFINITY;
    if (params.epsilon || out.epsilon <= out.epsilon_division_bound) break;
    out.epsilon = out.epsilon_division_bound;
  }
  LemmaParams inner = params;
  inner.epsilon = out.epsilon;
  std::vector<CertNode> parts;
  std::vector<VertexSet> stripped;
  out.a = g.empty_set();
  for (std::size_t i = 0; i < out.division.parts.size(); ++i) {
    const VertexSet& part = out.division.parts[i];
    const VertexSet rim = inner_boundary(g, part);
    VertexSet core = part - rim;
    if (!outer_boundary(g, core).is_subset_of(rim)) {
      throw std::logic_error("big_correctable_set: stripped part leaks past its rim");
    }
    if (core.empty()) continue;
    Certificate cert;
    try {
      cert = certify_small_boundary_set(g, d, core, inner);
    } catch (const CertificationError& e) {
      throw CertificationError("part " + std::to_string(i) + ": " + e.what(),
                               static_cast<int>(i));
    }
    out.a |= core;
    stripped.push_back(core);
    parts.push_back(std::move(cert.root));
  }
  for (std::size_t i = 0; i < stripped.size(); ++i) {
    if (outer_boundary(g, stripped[i]).intersects(out.a - stripped[i])) {
      throw std::logic_error("big_correctable_set: stripped parts are adjacent");
    }
  }
  out.removed = g.all() - out.a;
  out.certificate = make_certificate(g, d, union_or_single(std::move(parts), n));
  return out;
}

CertNode certify_small_pieces(const ConnGraph& g, int d, const std::vector<VertexSet>& pieces) {
  std::vector<CertNode> leaves;
  VertexSet all = g.empty_set();
  for (const auto& p : pieces) {
    if (p.size() >= d) throw std::logic_error("certify_small_pieces: piece not smaller than d");
    all |= p;
  }
  for (const auto& p : pieces) {
    if (outer_boundary(g, p).intersects(all - p)) {
      throw std::logic_error("certify_small_pieces: pieces are adjacent");
    }
    leaves.push_back(distance_leaf(p));
  }
  return union_or_single(std::move(leaves), g.num_vertices());
}

TradeoffPartition abc_partition(const ConnGraph& g, int d, const LemmaParams& params) {
  auto first = big_correctable_set(g, d, params);
  TradeoffPartition out;
  out.method = "main";
  out.d = d;
  out.beta = params.beta;
  out.c = params.c;
  out.epsilon = first.epsilon;
  out.a = first.a;
  out.cert_a = std::move(first.certificate);
  out.first_stage_removed = first.removed.size();
  const auto tree = build_separator_tree(g, d, first.removed, params.exact_cap);
  const auto second = leaves_partition(tree);
  out.b = second.a;
  out.c_set = second.removed;
  out.cert_b = make_certificate(g, d, certify_small_pieces(g, d, second.leaves));
  return out;
}

TradeoffPartition warmup_abc_partition(const ConnGraph& g, int d, int exact_cap) {
  if (d < 1) throw InputError("d must be >= 1");
  TradeoffPartition out;
  out.method = "warmup";
  out.d = d;
  const auto first = leaves_partition(build_separator_tree(g, d, exact_cap));
  out.a = first.a;
  out.cert_a = make_certificate(g, d, certify_small_pieces(g, d, first.leaves));
  out.first_stage_removed = first.removed.size();
  const auto second =
      leaves_partition(build_separator_tree(g, d, first.removed, exact_cap));
  out.b = second.a;
  out.c_set = second.removed;
  out.cert_b = make_certificate(g, d, certify_small_pieces(g, d, second.leaves));
  return out;
}

}  // namespace qsep
