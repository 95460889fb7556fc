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

#include "qsep/certificate.hpp"

#include "qsep/errors.hpp"

namespace qsep {

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::distance: return "Distance";
    case Rule::trivial: return "Trivial";
    case Rule::union_of: return "Union";
    case Rule::expansion: return "Expansion";
  }
  return "?";
}

Rule parse_rule(const std::string& name) {
  if (name == "Distance") return Rule::distance;
  if (name == "Trivial") return Rule::trivial;
  if (name == "Union") return Rule::union_of;
  if (name == "Expansion") return Rule::expansion;
  throw InputError("unknown certificate rule '" + name + "'");
}

CertNode distance_leaf(VertexSet target) {
  return CertNode{Rule::distance, std::move(target), {}};
}

CertNode trivial_node(VertexSet target, CertNode child) {
  CertNode node{Rule::trivial, std::move(target), {}};
  node.children.push_back(std::move(child));
  return node;
}

CertNode union_node(std::vector<CertNode> children) {
  if (children.empty()) throw InputError("union_node needs children");
  VertexSet target(children.front().target.universe());
  for (const auto& c : children) target |= c.target;
  return CertNode{Rule::union_of, std::move(target), std::move(children)};
}

CertNode expansion_node(CertNode region, CertNode boundary) {
  VertexSet target = region.target | boundary.target;
  CertNode node{Rule::expansion, std::move(target), {}};
  node.children.push_back(std::move(region));
  node.children.push_back(std::move(boundary));
  return node;
}

CertNode union_or_single(std::vector<CertNode> parts, int universe) {
  if (parts.empty()) return distance_leaf(VertexSet(universe));
  if (parts.size() == 1) return std::move(parts.front());
  return union_node(std::move(parts));
}

Certificate make_certificate(const ConnGraph& g, int d, CertNode root) {
  return Certificate{d, g.hash(), std::move(root)};
}

std::size_t count_nodes(const CertNode& node) {
  std::size_t total = 1;
  for (const auto& c : node.children) total += count_nodes(c);
  return total;
}

namespace {

struct Checker {
  const ConnGraph& g;
  int d;
  CheckResult result;

  bool fail(const std::string& path, std::string reason) {
    result.ok = false;
    result.path = path;
    result.reason = std::move(reason);
    return false;
  }

  bool check(const CertNode& node, const std::string& path) {
    ++result.nodes_checked;
    const int n = g.num_vertices();
    if (node.target.universe() != n) {
      return fail(path, "target universe " + std::to_string(node.target.universe()) +
                            " does not match graph size " + std::to_string(n));
    }
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      if (!check(node.children[i], path + "/" + std::to_string(i))) return false;
    }
    const auto& kids = node.children;
    switch (node.rule) {
      case Rule::distance:
        if (!kids.empty()) return fail(path, "Distance node must have no children");
        if (node.target.size() >= d) {
          return fail(path, "Distance: |target| = " + std::to_string(node.target.size()) +
                                " is not < d = " + std::to_string(d));
        }
        return true;
      case Rule::trivial:
        if (kids.size() != 1) return fail(path, "Trivial node must have exactly one child");
        if (!node.target.is_subset_of(kids[0].target)) {
          return fail(path, "Trivial: target not contained in child target; extra " +
                                (node.target - kids[0].target).to_string());
        }
        return true;
      case Rule::union_of: {
        if (kids.size() < 2) return fail(path, "Union node needs at least two children");
        VertexSet all(n);
        int total = 0;
        for (const auto& k : kids) {
          all |= k.target;
          total += k.target.size();
        }
        if (total != all.size()) return fail(path, "Union: children are not pairwise disjoint");
        for (std::size_t i = 0; i < kids.size(); ++i) {
          const VertexSet others = all - kids[i].target;
          const VertexSet touch = outer_boundary(g, kids[i].target) & others;
          if (!touch.empty()) {
            return fail(path, "Union: child " + std::to_string(i) +
                                  " is adjacent to another child at " + touch.to_string());
          }
        }
        if (!(all == node.target)) return fail(path, "Union: target is not the union of children");
        return true;
      }
      case Rule::expansion: {
        if (kids.size() != 2) return fail(path, "Expansion node needs exactly (U, T) children");
        const VertexSet boundary = outer_boundary(g, kids[0].target);
        if (!boundary.is_subset_of(kids[1].target)) {
          return fail(path, "Expansion: T misses outer-boundary vertices " +
                                (boundary - kids[1].target).to_string());
        }
        if (!((kids[0].target | kids[1].target) == node.target)) {
          return fail(path, "Expansion: target is not U + T");
        }
        return true;
      }
    }
    return fail(path, "unknown rule");
  }
};

}  // namespace

CheckResult check_certificate(const ConnGraph& g, int d, const Certificate& cert) {
  const std::string h = g.hash();
  if (cert.graph_hash != h) {
    throw ProvenanceError("certificate graph hash " + cert.graph_hash +
                          " does not match graph " + h);
  }
  Checker checker{g, d, {}};
  if (cert.d != d) {
    checker.fail("root", "certificate was issued for d = " + std::to_string(cert.d) +
                             ", asked to check d = " + std::to_string(d));
    return checker.result;
  }
  checker.check(cert.root, "root");
  return checker.result;
}

}  // namespace qsep
