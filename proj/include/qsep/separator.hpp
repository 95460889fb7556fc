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
#include <string>
#include <vector>

#include "qsep/graph.hpp"
#include "qsep/vertex_set.hpp"

namespace qsep {

// V = U1 + T + U2 with |U1|, |U2| <= 2|V|/3 and no U1-U2 edge.
struct SeparatorPartition {
  VertexSet u1;
  VertexSet t;
  VertexSet u2;

  bool operator==(const SeparatorPartition&) const = default;
};

struct SeparatorReport {
  bool valid = true;
  std::vector<std::string> violations;
};

// Never throws on a semantic failure; every violated clause is reported.
SeparatorReport verify_separator(const ConnGraph& g, const SeparatorPartition& p);

// Balance test in exact integer arithmetic: 3 * part <= 2 * n.
inline bool balanced_part(long long part, long long n) { return 3 * part <= 2 * n; }

inline constexpr int kDefaultExactSeparatorCap = 18;

// Minimum |T|. Ties: lexicographically smallest sorted T, then
// lexicographically smallest sorted U1. Throws CapExceeded above `cap`.
SeparatorPartition exact_separator(const ConnGraph& g,
                                   int cap = kDefaultExactSeparatorCap);

// Always returns a valid partition; |T| is not guaranteed minimal.
SeparatorPartition heuristic_separator(const ConnGraph& g);

// exact_separator when n <= exact_cap, heuristic otherwise.
SeparatorPartition find_separator(const ConnGraph& g, int exact_cap,
                                  bool* used_exact = nullptr);

enum class FitKind { analytic, sampled_envelope, user_supplied };
std::string to_string(FitKind kind);
FitKind parse_fit_kind(const std::string& s);

struct ProfileSample {
  int r = 0;
  int separator = 0;
  bool operator==(const ProfileSample&) const = default;
};

// s_G(r) <= beta * r^c. c == 0 is the degenerate-fit sentinel.
struct ProfileFit {
  double beta = 1.0;
  double c = 0.0;
  std::vector<ProfileSample> samples;
  FitKind kind = FitKind::user_supplied;
  bool beta_clamped = false;

  bool operator==(const ProfileFit&) const = default;
};

struct ProfileOptions {
  int samples_per_size = 4;
  std::uint64_t seed = 0;
  // Subgraphs up to this size use exact_separator.
  int exact_cap = 12;
};

// Samples breadth-first balls at sizes 2, 4, 8, ... plus the whole graph,
// takes the running-maximum envelope per size and fits log-log slope c, then
// the smallest beta putting every sample under beta * r^c. The result is a
// lower estimate of the true profile.
ProfileFit estimate_profile(const ConnGraph& g, const ProfileOptions& options);

// Upper envelope of the samples: for each distinct r (ascending), the largest
// separator observed at any size <= r.
std::vector<ProfileSample> profile_envelope(const std::vector<ProfileSample>& samples);

}  // namespace qsep
