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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qsep/vertex_set.hpp"

namespace qsep {

struct StabilizerCode;

// Where a graph came from. Not part of the graph's identity: `hash()` depends
// only on the vertex count and edge set.
struct GraphProvenance {
  std::string source;
  std::uint64_t generator_hash = 0;
};

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class ConnGraph {
 public:
  ConnGraph() = default;
  // Builds from an edge list; duplicate edges collapse, self-loops and
  // out-of-range endpoints throw InputError.
  ConnGraph(int n, const std::vector<std::pair<int, int>>& edges,
            GraphProvenance provenance = {});

  int num_vertices() const { return n_; }
  int num_edges() const { return num_edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;
  int max_degree() const;
  // Adjacency bitmask of v; only available when n <= 64.
  std::uint64_t neighbor_mask(int v) const { return adj_mask_[v]; }
  bool has_masks() const { return !adj_mask_.empty() || n_ == 0; }

  // Sorted (u < v) edge list.
  std::vector<std::pair<int, int>> edges() const;
  // FNV-1a digest of the canonical edge-list serialization, as 16 hex digits.
  std::string hash() const;

  const GraphProvenance& provenance() const { return provenance_; }

  VertexSet all() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

  bool operator==(const ConnGraph& o) const {
    return n_ == o.n_ && adj_ == o.adj_;
  }

 private:
  int n_ = 0;
  int num_edges_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> adj_mask_;
  GraphProvenance provenance_;
};

// Edge (u, v) iff some generator's support holds both u and v.
ConnGraph build_graph(const StabilizerCode& code);

// Vertices outside U with a neighbor in U.
VertexSet outer_boundary(const ConnGraph& g, const VertexSet& region);
// Vertices of U with a neighbor outside U.
VertexSet inner_boundary(const ConnGraph& g, const VertexSet& region);

struct InducedSubgraph {
  ConnGraph graph;
  // Local vertex i is parent vertex to_parent[i] (increasing).
  std::vector<int> to_parent;

  VertexSet lift(const VertexSet& local, int parent_universe) const;
};

InducedSubgraph induced_subgraph(const ConnGraph& g, const VertexSet& region);

// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> components(const ConnGraph& g);
// Components of the subgraph induced by `region`, as subsets of g's vertices.
std::vector<VertexSet> components_within(const ConnGraph& g, const VertexSet& region);

// No edge joins the two (required disjoint) sets. Throws InputError on overlap.
bool are_disconnected(const ConnGraph& g, const VertexSet& a, const VertexSet& b);

// Common generators used by tests, the CLI and experiments.
ConnGraph grid_graph(int rows, int cols);
ConnGraph path_graph(int n);
ConnGraph complete_graph(int n);

// Edge-list format: "n m" header, then one "u v" line per edge (u < v),
// sorted lexicographically. Blank lines and '#' comments are skipped on read.
void write_edge_list(std::ostream& out, const ConnGraph& g);
ConnGraph read_edge_list(std::istream& in);
void write_dot(std::ostream& out, const ConnGraph& g);

}  // namespace qsep
