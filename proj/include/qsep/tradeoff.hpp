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
#include <optional>
#include <string>
#include <vector>

#include "qsep/certificate.hpp"
#include "qsep/graph.hpp"
#include "qsep/partition.hpp"
#include "qsep/stabilizer.hpp"

namespace qsep {

// |C| d^e / n for the three trade-off exponents e.
double exponent_warmup(double c);       // 2(1 - c)
double exponent_main(double c);         // (1 - c)(1 + 1/c)
double exponent_conjecture(double c);   // 2(1 - c)/c
double size_ratio(int size, int d, int n, double exponent);

enum class Verdict { pass, fail, indeterminate };
std::string to_string(Verdict v);

// Raw measurements behind a k <= |C| check. The verdict is always derived
// from these fields, never stored.
struct BoundReport {
  std::string code_name;
  int n = 0;
  int k = 0;
  int d = 0;
  double beta = 0.0;
  double c = 0.0;
  std::string profile_source;
  std::string method;
  int size_a = 0;
  int size_b = 0;
  int size_c = 0;
  bool is_partition = false;
  bool cert_a_valid = false;
  bool cert_b_valid = false;
  std::string cert_failure;
  // Code-level confirmation, only run for n <= 10.
  std::optional<bool> a_code_correctable;
  std::optional<bool> b_code_correctable;

  Verdict verdict() const;
  bool operator==(const BoundReport&) const = default;
  double ratio_warmup() const { return size_ratio(size_c, d, n, exponent_warmup(c)); }
  double ratio_main() const { return size_ratio(size_c, d, n, exponent_main(c)); }
  double ratio_conjecture() const { return size_ratio(size_c, d, n, exponent_conjecture(c)); }
};

// Re-validates both certificates against the code's connectivity graph and
// reports k against |C|. Throws ProvenanceError on a graph mismatch.
BoundReport verify_k_bound(const StabilizerCode& code, const TradeoffPartition& partition,
                           const std::string& profile_source = "user_supplied",
                           int oracle_max_n = 10);

struct DistanceCheck {
  int n = 0;
  int k = 0;
  int d = 0;
  double beta = 0.0;
  double c = 0.0;
  double epsilon = 0.0;
  bool certified = false;
  bool certificate_valid = false;
  std::string reason;
  std::optional<Certificate> certificate;

  // Certified V while k >= 1: the supplied (beta, c) cannot bound this graph.
  bool contradiction() const { return certified && certificate_valid && k >= 1; }
  double distance_ratio() const;  // d / n^c
  bool operator==(const DistanceCheck&) const = default;
};

// Attempts to certify the whole vertex set d-correctable.
DistanceCheck certify_whole_graph(const ConnGraph& g, int d, const LemmaParams& params);
// As above on the code's graph; d defaults to code_distance when n <= 12.
DistanceCheck distance_bound_check(const StabilizerCode& code, const LemmaParams& params,
                                   std::optional<int> d = std::nullopt);

enum class ScalingFamily { grid_graph, rotated_surface, toric };
ScalingFamily parse_scaling_family(const std::string& s);
std::string to_string(ScalingFamily f);

// d = L or d = constant.
struct DRule {
  bool proportional = true;
  int constant = 0;
  int eval(int size) const { return proportional ? size : constant; }
  std::string to_string() const;
};
DRule parse_d_rule(const std::string& text);

struct ScalingRow {
  std::string family;
  int size = 0;
  int n = 0;
  std::optional<int> k;
  int d = 0;
  double beta = 0.0;
  double c = 0.0;
  std::string method;
  int size_a = 0;
  int size_b = 0;
  int size_c = 0;
  int first_stage_removed = 0;
  std::string status;

  double ratio_warmup() const { return size_ratio(size_c, d, n, exponent_warmup(c)); }
  double ratio_main() const { return size_ratio(size_c, d, n, exponent_main(c)); }
  double ratio_conjecture() const { return size_ratio(size_c, d, n, exponent_conjecture(c)); }
};

inline constexpr const char* kScalingCsvHeader =
    "family,L,n,k,d,beta,c,method,size_A,size_B,size_C,ratio_warmup,ratio_main,ratio_conj,status";

// One warmup row and one main row per size, in input order. Failures become
// rows with a non-"ok" status. `jobs` > 1 runs sizes concurrently.
std::vector<ScalingRow> scaling_experiment(ScalingFamily family, const std::vector<int>& sizes,
                                           const DRule& rule, const LemmaParams& params,
                                           int jobs = 1);
std::string scaling_csv(const std::vector<ScalingRow>& rows);

enum class SearchMode { exact, heuristic };
std::string to_string(SearchMode m);

struct ExplorerResult {
  std::string descriptor;
  int n = 0;
  int d = 0;
  double c = 0.0;
  SearchMode mode = SearchMode::exact;
  std::uint64_t seed = 0;
  int best_c = 0;
  // n / d^(2(1-c)/c)
  double conjectured_scale = 0.0;
  std::optional<TradeoffPartition> best;

  std::string label() const;
  bool operator==(const ExplorerResult&) const = default;
};

struct ExplorerOptions {
  int exact_max_n = 10;
  int profile_samples = 4;
  int exact_cap = kDefaultExactSeparatorCap;
};

// Exact mode: minimum |C| over disjoint A, B in the minimal family (the best
// pair is always a maximal member plus the rest of another maximal member).
// Heuristic mode: best certificate-valid warmup/main partition over an
// epsilon sweep, with beta estimated from the graph.
ExplorerResult conjecture_search(const ConnGraph& g, int d, double c, SearchMode mode,
                                 std::uint64_t seed, const ExplorerOptions& options = {});

}  // namespace qsep
