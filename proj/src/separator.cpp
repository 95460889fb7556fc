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

#include "qsep/separator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include "qsep/errors.hpp"

namespace qsep {

SeparatorReport verify_separator(const ConnGraph& g, const SeparatorPartition& p) {
  SeparatorReport report;
  auto fail = [&](std::string msg) {
    report.valid = false;
    report.violations.push_back(std::move(msg));
  };
  const int n = g.num_vertices();
  if (p.u1.universe() != n || p.t.universe() != n || p.u2.universe() != n) {
    fail("universe mismatch: graph has " + std::to_string(n) + " vertices");
    return report;
  }
  if (p.u1.intersects(p.t)) fail("U1 and T overlap at " + (p.u1 & p.t).to_string());
  if (p.u1.intersects(p.u2)) fail("U1 and U2 overlap at " + (p.u1 & p.u2).to_string());
  if (p.t.intersects(p.u2)) fail("T and U2 overlap at " + (p.t & p.u2).to_string());
  VertexSet missing = g.all() - (p.u1 | p.t | p.u2);
  if (!missing.empty()) fail("vertices not covered: " + missing.to_string());
  if (!balanced_part(p.u1.size(), n)) {
    fail("|U1| = " + std::to_string(p.u1.size()) + " exceeds 2/3 of " + std::to_string(n));
  }
  if (!balanced_part(p.u2.size(), n)) {
    fail("|U2| = " + std::to_string(p.u2.size()) + " exceeds 2/3 of " + std::to_string(n));
  }
  bool reported_edge = false;
  p.u1.for_each([&](int u) {
    if (reported_edge) return;
    for (int v : g.neighbors(u)) {
      if (p.u2.contains(v)) {
        fail("edge (" + std::to_string(std::min(u, v)) + "," +
             std::to_string(std::max(u, v)) + ") joins U1 and U2");
        reported_edge = true;
        return;
      }
    }
  });
  return report;
}

namespace {

std::uint64_t component_of(const ConnGraph& g, std::uint64_t allowed, int root) {
  std::uint64_t comp = std::uint64_t{1} << root;
  std::uint64_t frontier = comp;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) {
      next |= g.neighbor_mask(std::countr_zero(f));
    }
    next &= allowed & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

// Whether some union of components leaves both sides balanced; when `side`
// is given, also stores the lexicographically smallest such union.
bool best_side(const std::vector<std::uint64_t>& comps, int n, int rest,
               std::uint64_t* side) {
  const int m = static_cast<int>(comps.size());
  std::uint64_t reach = 1;  // bit s: some subset sums to s
  for (auto c : comps) reach |= reach << std::popcount(c);
  bool feasible = false;
  for (int s = 0; s <= rest; ++s) {
    if (((reach >> s) & 1u) && balanced_part(s, n) && balanced_part(rest - s, n)) {
      feasible = true;
      break;
    }
  }
  if (!feasible || side == nullptr) return feasible;
  bool found = false;
  std::uint64_t best = 0;
  const std::uint64_t total = std::uint64_t{1} << m;
  std::uint64_t mask = 0;
  int size = 0;
  // Gray-code walk over component subsets.
  for (std::uint64_t i = 0; i < total; ++i) {
    if (i > 0) {
      int flip = std::countr_zero(i);
      mask ^= comps[flip];
      size = std::popcount(mask);
    }
    if (balanced_part(size, n) && balanced_part(rest - size, n)) {
      if (!found || mask_lex_less(mask, best)) {
        best = mask;
        found = true;
      }
    }
  }
  *side = best;
  return found;
}

}  // namespace

SeparatorPartition exact_separator(const ConnGraph& g, int cap) {
  const int n = g.num_vertices();
  if (n > cap || n > 62) {
    throw CapExceeded("exact_separator: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(std::min(cap, 62)));
  }
  const std::uint64_t full = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  std::vector<int> pick;
  std::vector<std::uint64_t> comps;
  for (int k = 0; k <= n; ++k) {
    pick.resize(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::uint64_t t = 0;
      for (int v : pick) t |= std::uint64_t{1} << v;
      const std::uint64_t rest = full & ~t;
      comps.clear();
      for (std::uint64_t left = rest; left;) {
        std::uint64_t c = component_of(g, rest, std::countr_zero(left));
        comps.push_back(c);
        left &= ~c;
      }
      if (best_side(comps, n, n - k, nullptr)) {
        std::uint64_t u1 = 0;
        best_side(comps, n, n - k, &u1);
        return SeparatorPartition{VertexSet::from_mask(n, u1), VertexSet::from_mask(n, t),
                                  VertexSet::from_mask(n, rest & ~u1)};
      }
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("exact_separator: T = V is always feasible");
}

namespace {

// BFS from `seed` visiting neighbors in index order; when the component is
// exhausted, restarts at the lowest unvisited vertex.
std::vector<int> bfs_order(const ConnGraph& g, int seed) {
  const int n = g.num_vertices();
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> dist(n, -1);
  std::deque<int> queue;
  int next_root = 0;
  int root = seed;
  while (true) {
    dist[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (int v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    while (next_root < n && dist[next_root] >= 0) ++next_root;
    if (next_root >= n) break;
    root = next_root;
  }
  return order;
}

// Farthest vertex from `seed` within its component (lowest index on ties),
// and its distance.
std::pair<int, int> farthest(const ConnGraph& g, int seed) {
  std::vector<int> d(g.num_vertices(), -1);
  std::deque<int> queue{seed};
  d[seed] = 0;
  int best = seed;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (d[u] > d[best] || (d[u] == d[best] && u < best)) best = u;
    for (int v : g.neighbors(u)) {
      if (d[v] < 0) {
        d[v] = d[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return {best, d[best]};
}

int pseudo_peripheral(const ConnGraph& g) {
  int v = 0;
  auto [far, ecc] = farthest(g, v);
  for (int iter = 0; iter < 16; ++iter) {
    auto [next, next_ecc] = farthest(g, far);
    if (next_ecc <= ecc) break;
    v = far;
    far = next;
    ecc = next_ecc;
  }
  return far;
}

struct Candidate {
  int t_size = std::numeric_limits<int>::max();
  int prefix = 0;
  bool outer = false;  // true: T = outer boundary of X, false: inner boundary
  std::vector<int> order;
};

void scan_prefixes(const ConnGraph& g, std::vector<int> order, Candidate& best) {
  const int n = g.num_vertices();
  std::vector<int> cnt(n, 0);
  std::vector<char> in_x(n, 0);
  int outer = 0, inner = 0;
  bool improved = false;
  for (int s = 1; s <= n; ++s) {
    const int v = order[s - 1];
    const int deg = static_cast<int>(g.neighbors(v).size());
    if (cnt[v] > 0) --outer;
    in_x[v] = 1;
    if (deg - cnt[v] > 0) ++inner;
    for (int w : g.neighbors(v)) {
      ++cnt[w];
      if (!in_x[w]) {
        if (cnt[w] == 1) ++outer;
      } else {
        const int wdeg = static_cast<int>(g.neighbors(w).size());
        if (wdeg - cnt[w] == 0) --inner;
      }
    }
    // T = outer boundary: U1 = X.
    if (outer < best.t_size && balanced_part(s, n) && balanced_part(n - s - outer, n)) {
      best = Candidate{outer, s, true, {}};
      improved = true;
    }
    // T = inner boundary: U2 = V \ X.
    if (inner < best.t_size && balanced_part(s - inner, n) && balanced_part(n - s, n)) {
      best = Candidate{inner, s, false, {}};
      improved = true;
    }
  }
  if (improved) best.order = std::move(order);
}

void refine(const ConnGraph& g, SeparatorPartition& p) {
  const int n = g.num_vertices();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t : p.t.to_vector()) {
      bool touches_u1 = false, touches_u2 = false;
      for (int w : g.neighbors(t)) {
        touches_u1 = touches_u1 || p.u1.contains(w);
        touches_u2 = touches_u2 || p.u2.contains(w);
      }
      if (!touches_u2 && balanced_part(p.u1.size() + 1, n)) {
        p.t.erase(t);
        p.u1.insert(t);
        changed = true;
      } else if (!touches_u1 && balanced_part(p.u2.size() + 1, n)) {
        p.t.erase(t);
        p.u2.insert(t);
        changed = true;
      }
    }
  }
}

}  // namespace

SeparatorPartition heuristic_separator(const ConnGraph& g) {
  const int n = g.num_vertices();
  SeparatorPartition fallback{g.empty_set(), g.all(), g.empty_set()};
  if (n == 0) return fallback;
  Candidate best;
  best.t_size = n;  // T = V is always valid
  const int seed = pseudo_peripheral(g);
  scan_prefixes(g, bfs_order(g, seed), best);
  const int other = farthest(g, seed).first;
  if (other != seed) scan_prefixes(g, bfs_order(g, other), best);

  SeparatorPartition p = fallback;
  if (!best.order.empty()) {
    VertexSet x(n);
    for (int i = 0; i < best.prefix; ++i) x.insert(best.order[i]);
    if (best.outer) {
      p.t = outer_boundary(g, x);
      p.u1 = x;
      p.u2 = g.all() - x - p.t;
    } else {
      p.t = inner_boundary(g, x);
      p.u1 = x - p.t;
      p.u2 = g.all() - x;
    }
  }
  refine(g, p);
  return p;
}

SeparatorPartition find_separator(const ConnGraph& g, int exact_cap, bool* used_exact) {
  const bool exact = g.num_vertices() <= exact_cap;
  if (used_exact) *used_exact = exact;
  return exact ? exact_separator(g, exact_cap) : heuristic_separator(g);
}

std::string to_string(FitKind kind) {
  switch (kind) {
    case FitKind::analytic: return "analytic";
    case FitKind::sampled_envelope: return "sampled_envelope";
    case FitKind::user_supplied: return "user_supplied";
  }
  return "?";
}

FitKind parse_fit_kind(const std::string& s) {
  if (s == "analytic") return FitKind::analytic;
  if (s == "sampled_envelope") return FitKind::sampled_envelope;
  if (s == "user_supplied") return FitKind::user_supplied;
  throw InputError("unknown fit_kind '" + s + "'");
}

std::vector<ProfileSample> profile_envelope(const std::vector<ProfileSample>& samples) {
  std::vector<ProfileSample> sorted = samples;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.r != b.r ? a.r < b.r : a.separator < b.separator;
  });
  std::vector<ProfileSample> env;
  int running = 0;
  for (const auto& s : sorted) {
    running = std::max(running, s.separator);
    if (!env.empty() && env.back().r == s.r) {
      env.back().separator = running;
    } else {
      env.push_back({s.r, running});
    }
  }
  return env;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

VertexSet bfs_ball(const ConnGraph& g, int root, int size) {
  VertexSet ball(g.num_vertices());
  std::deque<int> queue{root};
  ball.insert(root);
  int count = 1;
  while (!queue.empty() && count < size) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u)) {
      if (count >= size) break;
      if (!ball.contains(v)) {
        ball.insert(v);
        queue.push_back(v);
        ++count;
      }
    }
  }
  return ball;
}

}  // namespace

ProfileFit estimate_profile(const ConnGraph& g, const ProfileOptions& options) {
  if (options.samples_per_size < 1) throw InputError("sample_budget must be >= 1");
  const int n = g.num_vertices();
  ProfileFit fit;
  fit.kind = FitKind::sampled_envelope;
  if (n == 0) return fit;

  auto separator_size = [&](const ConnGraph& h) {
    return find_separator(h, options.exact_cap).t.size();
  };
  std::uint64_t sample_index = 0;
  for (int r = 2; r < n; r *= 2) {
    for (int i = 0; i < options.samples_per_size; ++i, ++sample_index) {
      const std::uint64_t draw = splitmix64(options.seed ^ splitmix64(sample_index));
      const int root = static_cast<int>(draw % static_cast<std::uint64_t>(n));
      const auto ball = bfs_ball(g, root, r);
      const auto sub = induced_subgraph(g, ball);
      fit.samples.push_back({ball.size(), separator_size(sub.graph)});
    }
  }
  fit.samples.push_back({n, separator_size(g)});

  const auto env = profile_envelope(fit.samples);
  std::vector<double> xs, ys;
  for (const auto& p : env) {
    if (p.r >= 2 && p.separator >= 1) {
      xs.push_back(std::log(static_cast<double>(p.r)));
      ys.push_back(std::log(static_cast<double>(p.separator)));
    }
  }
  int max_sep = 0;
  for (const auto& s : fit.samples) max_sep = std::max(max_sep, s.separator);

  double slope = 0.0;
  const bool varied =
      xs.size() >= 2 && std::any_of(ys.begin(), ys.end(), [&](double y) { return y != ys[0]; });
  if (varied) {
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxx += (xs[i] - mx) * (xs[i] - mx);
      sxy += (xs[i] - mx) * (ys[i] - my);
    }
    slope = sxx > 0 ? sxy / sxx : 0.0;
  }
  if (slope <= 0.0) {
    fit.c = 0.0;
    fit.beta = std::max(1, max_sep);
    fit.beta_clamped = max_sep < 1;
    return fit;
  }
  fit.c = std::min(slope, 1.0);
  double beta = 0.0;
  for (const auto& s : fit.samples) {
    if (s.r >= 1) beta = std::max(beta, s.separator / std::pow(static_cast<double>(s.r), fit.c));
  }
  fit.beta_clamped = beta < 1.0;
  fit.beta = std::max(beta, 1.0);
  return fit;
}

}  // namespace qsep
