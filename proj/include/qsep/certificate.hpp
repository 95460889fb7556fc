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

#include <string>
#include <vector>

#include "qsep/graph.hpp"
#include "qsep/vertex_set.hpp"

namespace qsep {

enum class Rule { distance, trivial, union_of, expansion };

std::string to_string(Rule rule);
Rule parse_rule(const std::string& name);

// One derivation step. Children by rule:
//   distance   none; |target| < d
//   trivial    one; target is a subset of the child's target
//   union_of   two or more; pairwise disjoint and disconnected, target = union
//   expansion  exactly (U, T); T contains the outer boundary of U,
//              target = U + T
struct CertNode {
  Rule rule = Rule::distance;
  VertexSet target;
  std::vector<CertNode> children;

  bool operator==(const CertNode&) const = default;
};

// A derivation tree bound to one graph (via its hash) and one d.
struct Certificate {
  int d = 0;
  std::string graph_hash;
  CertNode root;

  const VertexSet& target() const { return root.target; }
  bool operator==(const Certificate&) const = default;
};

CertNode distance_leaf(VertexSet target);
CertNode trivial_node(VertexSet target, CertNode child);
// Target is the union of the children's targets.
CertNode union_node(std::vector<CertNode> children);
CertNode expansion_node(CertNode region, CertNode boundary);
// Union when there are two or more parts; the lone part itself, or
// distance_leaf(empty) when there are none.
CertNode union_or_single(std::vector<CertNode> parts, int universe);

Certificate make_certificate(const ConnGraph& g, int d, CertNode root);

struct CheckResult {
  bool ok = true;
  // Child-index path from the root to the first failing node, e.g. "root/1/0".
  std::string path;
  std::string reason;
  int nodes_checked = 0;
};

// Validates every node against g and d without trusting the producer.
// Throws ProvenanceError when the certificate's graph hash does not match g.
CheckResult check_certificate(const ConnGraph& g, int d, const Certificate& cert);

std::size_t count_nodes(const CertNode& node);

template <typename F>
void for_each_node(const CertNode& node, F&& f) {
  f(node);
  for (const auto& c : node.children) for_each_node(c, f);
}

}  // namespace qsep
