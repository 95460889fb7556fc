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

#include "qsep/family.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "qsep/errors.hpp"

namespace qsep {

bool FamilyTable::contains(const VertexSet& s) const {
  if (s.universe() != n_) throw InputError("vertex set universe does not match family");
  return contains(static_cast<std::uint32_t>(s.to_mask()));
}

std::size_t FamilyTable::size() const {
  std::size_t total = 0;
  for (auto m : member_) total += m;
  return total;
}

std::vector<std::uint32_t> FamilyTable::maximal_members() const {
  std::vector<std::uint32_t> out;
  const std::uint32_t full = n_ == 0 ? 0 : (1u << n_) - 1;
  for (std::uint32_t mask = 0; mask < member_.size(); ++mask) {
    if (!member_[mask]) continue;
    bool maximal = true;
    for (std::uint32_t rest = full & ~mask; rest; rest &= rest - 1) {
      if (member_[mask | (rest & -rest)]) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(mask);
  }
  return out;
}

CertNode FamilyTable::derive_node(std::uint32_t mask, std::size_t& budget) const {
  if (budget == 0) throw CapExceeded("certificate derivation exceeded node budget");
  --budget;
  const Reason& why = reason_[mask];
  const auto set = [&](std::uint32_t m) { return VertexSet::from_mask(n_, m); };
  switch (why.origin) {
    case Origin::seed:
      return distance_leaf(set(mask));
    case Origin::down: {
      std::uint32_t super = why.a;
      while (reason_[super].origin == Origin::down) super = reason_[super].a;
      return trivial_node(set(mask), derive_node(super, budget));
    }
    case Origin::union_of: {
      std::vector<CertNode> parts;
      std::uint32_t rest = mask;
      while (reason_[rest].origin == Origin::union_of) {
        parts.push_back(derive_node(reason_[rest].a, budget));
        rest = reason_[rest].b;
      }
      parts.push_back(derive_node(rest, budget));
      return union_node(std::move(parts));
    }
    case Origin::expansion:
      return expansion_node(derive_node(why.a, budget), derive_node(why.b, budget));
    case Origin::none:
      break;
  }
  throw InputError("derive: set is not a family member");
}

Certificate FamilyTable::derive(const ConnGraph& g, std::uint32_t mask,
                                std::size_t max_nodes) const {
  if (g.num_vertices() != n_) throw InputError("derive: graph size mismatch");
  if (mask >= member_.size() || !member_[mask]) {
    throw InputError("derive: set is not a family member");
  }
  std::size_t budget = max_nodes;
  return make_certificate(g, d_, derive_node(mask, budget));
}

FamilyTable brute_force_family(const ConnGraph& g, int d, int cap) {
  const int n = g.num_vertices();
  if (n > cap || n > 24) {
    throw CapExceeded("brute_force_family: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  }
  using Origin = FamilyTable::Origin;
  FamilyTable table;
  table.n_ = n;
  table.d_ = d;
  const std::uint32_t count = 1u << n;
  const std::uint32_t full = count - 1;
  table.member_.assign(count, 0);
  table.reason_.assign(count, {});
  auto& member = table.member_;
  auto& reason = table.reason_;

  std::vector<std::uint32_t> nbr(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int u : g.neighbors(v)) nbr[v] |= 1u << u;
  }
  auto neighborhood = [&](std::uint32_t s) {
    std::uint32_t out = 0;
    for (; s; s &= s - 1) out |= nbr[std::countr_zero(s)];
    return out;
  };
  // low_comp[s]: component of G[s] holding the lowest vertex of s.
  std::vector<std::uint32_t> low_comp(count, 0);
  for (std::uint32_t s = 1; s < count; ++s) {
    std::uint32_t comp = s & -s;
    std::uint32_t frontier = comp;
    while (frontier) {
      std::uint32_t next = neighborhood(frontier) & s & ~comp;
      comp |= next;
      frontier = next;
    }
    low_comp[s] = comp;
  }

  auto add = [&](std::uint32_t s, Origin origin, std::uint32_t a, std::uint32_t b) {
    member[s] = 1;
    reason[s] = {origin, a, b};
  };
  for (std::uint32_t s = 0; s < count; ++s) {
    if (std::popcount(s) < d) add(s, Origin::seed, 0, 0);
  }

  bool changed = true;
  while (changed && !member[full]) {
    changed = false;
    // Downward closure; strict subsets have smaller indices.
    for (std::uint32_t s = full;; --s) {
      if (member[s]) {
        for (std::uint32_t bits = s; bits; bits &= bits - 1) {
          const std::uint32_t sub = s & ~(bits & -bits);
          if (!member[sub]) add(sub, Origin::down, s, 0);
        }
      }
      if (s == 0) break;
    }
    // Union of a member component with the member remainder.
    for (std::uint32_t s = 1; s < count; ++s) {
      if (member[s]) continue;
      const std::uint32_t comp = low_comp[s];
      if (comp != s && member[comp] && member[s ^ comp]) {
        add(s, Origin::union_of, comp, s ^ comp);
        changed = true;
      }
    }
    // Expansion: U, T members with T containing the outer boundary of U.
    // T can be taken disjoint from U, since T minus U stays a member.
    for (std::uint32_t u = 0; u < count && !member[full]; ++u) {
      if (!member[u]) continue;
      const std::uint32_t boundary = neighborhood(u) & ~u;
      if (!member[boundary]) continue;
      const std::uint32_t free = full & ~u & ~boundary;
      for (std::uint32_t extra = free;; extra = (extra - 1) & free) {
        const std::uint32_t t = boundary | extra;
        if (member[t] && !member[u | t]) {
          add(u | t, Origin::expansion, u, t);
          changed = true;
        }
        if (extra == 0) break;
      }
    }
  }
  if (member[full]) {
    // Everything is derivable from the full set by downward closure.
    for (std::uint32_t s = 0; s < full; ++s) {
      if (!member[s]) add(s, Origin::down, full, 0);
    }
  }
  return table;
}

namespace {

std::mutex cache_mutex;
std::map<std::pair<std::string, int>, std::shared_ptr<const FamilyTable>> family_cache;

}  // namespace

std::shared_ptr<const FamilyTable> cached_family(const ConnGraph& g, int d, int cap) {
  auto key = std::make_pair(g.hash(), d);
  {
    std::lock_guard lock(cache_mutex);
    auto it = family_cache.find(key);
    if (it != family_cache.end()) return it->second;
  }
  auto table = std::make_shared<const FamilyTable>(brute_force_family(g, d, cap));
  std::lock_guard lock(cache_mutex);
  if (family_cache.size() >= 64) family_cache.clear();
  family_cache.emplace(key, table);
  return table;
}

bool is_graph_correctable(const ConnGraph& g, int d, const VertexSet& region, int cap) {
  return cached_family(g, d, cap)->contains(region);
}

}  // namespace qsep
