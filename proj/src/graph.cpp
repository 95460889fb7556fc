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

#include "qsep/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "qsep/errors.hpp"
#include "qsep/stabilizer.hpp"

namespace qsep {

ConnGraph::ConnGraph(int n, const std::vector<std::pair<int, int>>& edges,
                     GraphProvenance provenance)
    : n_(n), adj_(n), provenance_(std::move(provenance)) {
  if (n < 0) throw InputError("negative vertex count");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for n = " + std::to_string(n));
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    num_edges_ += static_cast<int>(a.size());
  }
  num_edges_ /= 2;
  if (n <= 64) {
    adj_mask_.assign(n, 0);
    for (int v = 0; v < n; ++v) {
      for (int u : adj_[v]) adj_mask_[v] |= std::uint64_t{1} << u;
    }
  }
}

bool ConnGraph::has_edge(int u, int v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int ConnGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& a : adj_) best = std::max(best, a.size());
  return static_cast<int>(best);
}

std::vector<std::pair<int, int>> ConnGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(num_edges_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string ConnGraph::hash() const {
  std::ostringstream canon;
  write_edge_list(canon, *this);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canon.str()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ConnGraph build_graph(const StabilizerCode& code) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& g : code.generators) {
    const auto supp = g.support().to_vector();
    for (std::size_t i = 0; i < supp.size(); ++i) {
      for (std::size_t j = i + 1; j < supp.size(); ++j) edges.emplace_back(supp[i], supp[j]);
    }
  }
  return ConnGraph(code.n, edges,
                   GraphProvenance{code.name, code.generator_hash()});
}

VertexSet outer_boundary(const ConnGraph& g, const VertexSet& region) {
  if (region.universe() != g.num_vertices()) {
    throw InputError("vertex set universe does not match graph");
  }
  VertexSet out(g.num_vertices());
  region.for_each([&](int u) {
    for (int v : g.neighbors(u)) {
      if (!region.contains(v)) out.insert(v);
    }
  });
  return out;
}

VertexSet inner_boundary(const ConnGraph& g, const VertexSet& region) {
  if (region.universe() != g.num_vertices()) {
    throw InputError("vertex set universe does not match graph");
  }
  VertexSet out(g.num_vertices());
  region.for_each([&](int u) {
    for (int v : g.neighbors(u)) {
      if (!region.contains(v)) {
        out.insert(u);
        break;
      }
    }
  });
  return out;
}

VertexSet InducedSubgraph::lift(const VertexSet& local, int parent_universe) const {
  VertexSet out(parent_universe);
  local.for_each([&](int v) { out.insert(to_parent[v]); });
  return out;
}

InducedSubgraph induced_subgraph(const ConnGraph& g, const VertexSet& region) {
  if (region.universe() != g.num_vertices()) {
    throw InputError("vertex set universe does not match graph");
  }
  InducedSubgraph sub;
  sub.to_parent = region.to_vector();
  std::vector<int> local(g.num_vertices(), -1);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    local[sub.to_parent[i]] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    for (int v : g.neighbors(sub.to_parent[i])) {
      int j = local[v];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  sub.graph = ConnGraph(static_cast<int>(sub.to_parent.size()), edges,
                        g.provenance());
  return sub;
}

std::vector<VertexSet> components_within(const ConnGraph& g, const VertexSet& region) {
  if (region.universe() != g.num_vertices()) {
    throw InputError("vertex set universe does not match graph");
  }
  std::vector<VertexSet> out;
  VertexSet seen(g.num_vertices());
  std::vector<int> stack;
  region.for_each([&](int root) {
    if (seen.contains(root)) return;
    VertexSet comp(g.num_vertices());
    stack.assign(1, root);
    seen.insert(root);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.insert(u);
      for (int v : g.neighbors(u)) {
        if (region.contains(v) && !seen.contains(v)) {
          seen.insert(v);
          stack.push_back(v);
        }
      }
    }
    out.push_back(std::move(comp));
  });
  return out;
}

std::vector<VertexSet> components(const ConnGraph& g) {
  return components_within(g, g.all());
}

bool are_disconnected(const ConnGraph& g, const VertexSet& a, const VertexSet& b) {
  if (a.intersects(b)) throw InputError("are_disconnected: sets overlap");
  bool disconnected = true;
  a.for_each([&](int u) {
    if (!disconnected) return;
    for (int v : g.neighbors(u)) {
      if (b.contains(v)) {
        disconnected = false;
        return;
      }
    }
  });
  return disconnected;
}

ConnGraph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InputError("grid dimensions must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return ConnGraph(rows * cols, edges,
                   GraphProvenance{"grid(" + std::to_string(rows) + "x" +
                                   std::to_string(cols) + ")", 0});
}

ConnGraph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return ConnGraph(n, edges, GraphProvenance{"path(" + std::to_string(n) + ")", 0});
}

ConnGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return ConnGraph(n, edges, GraphProvenance{"complete(" + std::to_string(n) + ")", 0});
}

void write_edge_list(std::ostream& out, const ConnGraph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

ConnGraph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    long long a, b;
    if (!(fields >> a)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw InputError("line " + std::to_string(line_no) + ": expected two integers");
    }
    if (!(fields >> b)) {
      throw InputError("line " + std::to_string(line_no) + ": expected two integers");
    }
    std::string extra;
    if (fields >> extra) {
      throw InputError("line " + std::to_string(line_no) + ": trailing data '" + extra + "'");
    }
    if (n < 0) {
      if (a < 0 || b < 0) throw InputError("line " + std::to_string(line_no) + ": negative header");
      n = a;
      m = b;
      continue;
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw InputError("line " + std::to_string(line_no) + ": vertex out of range");
    }
    if (a == b) throw InputError("line " + std::to_string(line_no) + ": self-loop");
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (n < 0) throw InputError("edge list is missing the 'n m' header");
  ConnGraph g(static_cast<int>(n), edges);
  if (g.num_edges() != m || static_cast<long long>(edges.size()) != m) {
    throw InputError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()) + " (" + std::to_string(g.num_edges()) +
                     " distinct)");
  }
  return g;
}

void write_dot(std::ostream& out, const ConnGraph& g) {
  out << "graph G {\n";
  for (int v = 0; v < g.num_vertices(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

}  // namespace qsep
