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
#include <memory>
#include <vector>

#include "qsep/certificate.hpp"
#include "qsep/graph.hpp"

namespace qsep {

inline constexpr int kDefaultFamilyCap = 14;

// The inclusion-minimum d-correctable family of a small graph, as a
// membership table over all 2^n subsets (bit i of the index = vertex i).
//
// Built as a least fixpoint. Union closure is applied pairwise: a left fold
// over pairwise disjoint, pairwise disconnected parts keeps every partial
// union disjoint from and disconnected to the next part, so binary unions
// generate every l-ary union.
class FamilyTable {
 public:
  int num_vertices() const { return n_; }
  int d() const { return d_; }
  bool contains(std::uint32_t mask) const { return member_[mask] != 0; }
  bool contains(const VertexSet& s) const;
  std::size_t size() const;
  // Inclusion-maximal members, ascending by mask.
  std::vector<std::uint32_t> maximal_members() const;

  // Replays the recorded derivation of a member as a certificate. Throws
  // InputError for non-members and CapExceeded if the tree would exceed
  // `max_nodes`.
  Certificate derive(const ConnGraph& g, std::uint32_t mask,
                     std::size_t max_nodes = 1u << 20) const;

  // Raw membership bytes (index = mask), for tests and serialization.
  const std::vector<std::uint8_t>& membership() const { return member_; }

 private:
  friend FamilyTable brute_force_family(const ConnGraph& g, int d, int cap);

  enum class Origin : std::uint8_t { none, seed, down, union_of, expansion };
  struct Reason {
    Origin origin = Origin::none;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
  };

  CertNode derive_node(std::uint32_t mask, std::size_t& budget) const;

  int n_ = 0;
  int d_ = 0;
  std::vector<std::uint8_t> member_;
  std::vector<Reason> reason_;
};

// Throws CapExceeded when n > cap.
FamilyTable brute_force_family(const ConnGraph& g, int d, int cap = kDefaultFamilyCap);

// Membership in brute_force_family(g, d), memoized per (graph hash, d).
bool is_graph_correctable(const ConnGraph& g, int d, const VertexSet& region,
                          int cap = kDefaultFamilyCap);
std::shared_ptr<const FamilyTable> cached_family(const ConnGraph& g, int d,
                                                 int cap = kDefaultFamilyCap);

}  // namespace qsep
