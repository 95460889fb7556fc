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

// Independent reference implementations for the unit and acceptance tests.
// They share no code with the library beyond the graph and code containers.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "qsep/graph.hpp"
#include "qsep/stabilizer.hpp"

namespace oracle {

using Mask = std::uint64_t;

inline std::vector<Mask> adjacency_masks(const qsep::ConnGraph& g) {
  std::vector<Mask> adj(g.num_vertices(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

inline Mask outer(const std::vector<Mask>& adj, Mask u) {
  Mask out = 0;
  for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
    if ((u >> v) & 1) out |= adj[v];
  }
  return out & ~u;
}

inline bool touching(const std::vector<Mask>& adj, Mask a, Mask b) {
  return (outer(adj, a) & b) != 0;
}

// Sorted-list lexicographic order on masks.
inline bool lex_less(Mask a, Mask b) {
  while (a && b) {
    const int x = std::countr_zero(a), y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

struct Split {
  Mask u1 = 0, t = 0, u2 = 0;
};

// All 3^n assignments; smallest |T|, then lex T, then lex U1.
inline Split naive_separator(const qsep::ConnGraph& g) {
  const int n = g.num_vertices();
  const auto adj = adjacency_masks(g);
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  Split best;
  bool have = false;
  for (long long code = 0; code < total; ++code) {
    Split s;
    long long x = code;
    for (int v = 0; v < n; ++v, x /= 3) {
      const Mask bit = Mask{1} << v;
      if (x % 3 == 0) s.u1 |= bit;
      if (x % 3 == 1) s.t |= bit;
      if (x % 3 == 2) s.u2 |= bit;
    }
    if (3 * std::popcount(s.u1) > 2 * n || 3 * std::popcount(s.u2) > 2 * n) continue;
    if (touching(adj, s.u1, s.u2)) continue;
    if (!have) {
      best = s;
      have = true;
      continue;
    }
    const int bt = std::popcount(best.t), st = std::popcount(s.t);
    if (st < bt || (st == bt && (lex_less(s.t, best.t) ||
                                 (s.t == best.t && lex_less(s.u1, best.u1))))) {
      best = s;
    }
  }
  return best;
}

// Least fixpoint of the four rules, evaluated over all pairs each round.
inline std::vector<bool> naive_family(const qsep::ConnGraph& g, int d) {
  const int n = g.num_vertices();
  const auto adj = adjacency_masks(g);
  const Mask full = (Mask{1} << n) - 1;
  std::vector<bool> in(std::size_t{1} << n, false);
  for (Mask s = 0; s <= full; ++s) in[s] = std::popcount(s) < d;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Mask> members;
    for (Mask s = 0; s <= full; ++s) {
      if (in[s]) members.push_back(s);
    }
    auto add = [&](Mask s) {
      if (!in[s]) {
        in[s] = true;
        changed = true;
      }
    };
    for (Mask a : members) {
      for (Mask b : members) {
        if ((a & b) == 0 && !touching(adj, a, b)) add(a | b);
        if ((outer(adj, a) & ~b) == 0) add(a | b);
      }
    }
    for (Mask s = full;; --s) {
      if (in[s]) {
        for (int v = 0; v < n; ++v) {
          if ((s >> v) & 1) add(s & ~(Mask{1} << v));
        }
      }
      if (s == 0) break;
    }
  }
  return in;
}

// Erasure correctability from the definition: enumerate every Pauli on U
// and look for one that commutes with the generators but is not a product
// of them.
class CodeOracle {
 public:
  explicit CodeOracle(const qsep::StabilizerCode& code) : n_(code.n) {
    for (const auto& gen : code.generators) {
      Mask x = 0, z = 0;
      for (int i = 0; i < n_; ++i) {
        if (gen.x.contains(i)) x |= Mask{1} << i;
        if (gen.z.contains(i)) z |= Mask{1} << i;
      }
      gens_.push_back({x, z});
    }
    // Row echelon of [x|z] as 2n-bit words packed into a pair.
    for (auto [x, z] : gens_) insert(x, z);
  }

  bool correctable(Mask u) const {
    std::vector<int> qubits;
    for (int i = 0; i < n_; ++i) {
      if ((u >> i) & 1) qubits.push_back(i);
    }
    const int w = static_cast<int>(qubits.size());
    long long total = 1;
    for (int i = 0; i < w; ++i) total *= 4;
    for (long long code = 1; code < total; ++code) {
      Mask x = 0, z = 0;
      long long c = code;
      for (int i = 0; i < w; ++i, c /= 4) {
        if (c % 4 == 1 || c % 4 == 3) x |= Mask{1} << qubits[i];
        if (c % 4 == 2 || c % 4 == 3) z |= Mask{1} << qubits[i];
      }
      if (!commutes_with_all(x, z)) continue;
      if (!in_span(x, z)) return false;
    }
    return true;
  }

  int distance() const {
    for (int w = 1; w <= n_; ++w) {
      for (Mask u = 0; u < (Mask{1} << n_); ++u) {
        if (std::popcount(u) == w && !correctable(u)) return w;
      }
    }
    return 0;
  }

  int logical_qubits() const { return n_ - static_cast<int>(basis_.size()); }

 private:
  bool commutes_with_all(Mask x, Mask z) const {
    for (auto [gx, gz] : gens_) {
      if ((std::popcount(x & gz) + std::popcount(z & gx)) % 2) return false;
    }
    return true;
  }
  static int top(Mask x, Mask z) {
    if (z) return 64 + std::bit_width(z) - 1;
    if (x) return std::bit_width(x) - 1;
    return -1;
  }
  void reduce(Mask& x, Mask& z) const {
    for (auto [bx, bz] : basis_) {
      const int p = top(bx, bz);
      const bool hit = p >= 64 ? ((z >> (p - 64)) & 1) : ((x >> p) & 1);
      if (hit) {
        x ^= bx;
        z ^= bz;
      }
    }
  }
  void insert(Mask x, Mask z) {
    reduce(x, z);
    if (x == 0 && z == 0) return;
    basis_.push_back({x, z});
    std::sort(basis_.begin(), basis_.end(),
              [](auto a, auto b) { return top(a.first, a.second) > top(b.first, b.second); });
  }
  bool in_span(Mask x, Mask z) const {
    reduce(x, z);
    return x == 0 && z == 0;
  }

  int n_;
  std::vector<std::pair<Mask, Mask>> gens_;
  std::vector<std::pair<Mask, Mask>> basis_;
};

// Edge (u, v) iff some generator's support holds both.
inline std::vector<std::pair<int, int>> naive_edges(const qsep::StabilizerCode& code) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < code.n; ++u) {
    for (int v = u + 1; v < code.n; ++v) {
      for (const auto& gen : code.generators) {
        const auto s = gen.support();
        if (s.contains(u) && s.contains(v)) {
          out.emplace_back(u, v);
          break;
        }
      }
    }
  }
  return out;
}

inline qsep::ConnGraph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return qsep::ConnGraph(n, edges);
}

inline bool connected(const qsep::ConnGraph& g) {
  const int n = g.num_vertices();
  if (n == 0) return true;
  const auto adj = adjacency_masks(g);
  Mask seen = 1, frontier = 1;
  while (frontier) {
    Mask next = 0;
    for (int v = 0; v < n; ++v) {
      if ((frontier >> v) & 1) next |= adj[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == n;
}

inline Mask to_mask(const qsep::VertexSet& s) {
  Mask m = 0;
  for (int v : s.to_vector()) m |= Mask{1} << v;
  return m;
}

}  // namespace oracle
