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

#include "qsep/tradeoff.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>

#include "qsep/errors.hpp"
#include "qsep/family.hpp"
#include "qsep/separator.hpp"

namespace qsep {

double exponent_warmup(double c) { return 2.0 * (1.0 - c); }
double exponent_main(double c) { return (1.0 - c) * (1.0 + 1.0 / c); }
double exponent_conjecture(double c) { return 2.0 * (1.0 - c) / c; }

double size_ratio(int size, int d, int n, double exponent) {
  if (n <= 0) return 0.0;
  return size * std::pow(static_cast<double>(d), exponent) / n;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::indeterminate: return "INDETERMINATE";
  }
  return "?";
}

Verdict BoundReport::verdict() const {
  if (!is_partition || !cert_a_valid || !cert_b_valid) return Verdict::indeterminate;
  if (a_code_correctable == false || b_code_correctable == false) return Verdict::indeterminate;
  return k <= size_c ? Verdict::pass : Verdict::fail;
}

BoundReport verify_k_bound(const StabilizerCode& code, const TradeoffPartition& partition,
                           const std::string& profile_source, int oracle_max_n) {
  const ConnGraph g = build_graph(code);
  BoundReport report;
  report.code_name = code.name;
  report.n = code.n;
  report.k = code.k;
  report.d = partition.d;
  report.beta = partition.beta;
  report.c = partition.c;
  report.profile_source = profile_source;
  report.method = partition.method;
  const int n = code.n;
  auto fits = [&](const VertexSet& s) { return s.universe() == n; };
  if (!fits(partition.a) || !fits(partition.b) || !fits(partition.c_set)) {
    throw InputError("partition universe does not match the code");
  }
  report.size_a = partition.a.size();
  report.size_b = partition.b.size();
  report.size_c = partition.c_set.size();
  report.is_partition = !partition.a.intersects(partition.b) &&
                        !partition.a.intersects(partition.c_set) &&
                        !partition.b.intersects(partition.c_set) &&
                        (partition.a | partition.b | partition.c_set) == g.all();
  auto check = [&](const Certificate& cert, const VertexSet& claimed, const char* label) {
    const auto res = check_certificate(g, partition.d, cert);
    if (!res.ok) {
      if (report.cert_failure.empty()) {
        report.cert_failure = std::string(label) + " at " + res.path + ": " + res.reason;
      }
      return false;
    }
    if (!claimed.is_subset_of(cert.target())) {
      if (report.cert_failure.empty()) {
        report.cert_failure = std::string(label) + ": certificate does not cover the set";
      }
      return false;
    }
    return true;
  };
  report.cert_a_valid = check(partition.cert_a, partition.a, "certificate_A");
  report.cert_b_valid = check(partition.cert_b, partition.b, "certificate_B");
  if (n <= oracle_max_n) {
    report.a_code_correctable = is_code_correctable(code, partition.a);
    report.b_code_correctable = is_code_correctable(code, partition.b);
  }
  return report;
}

double DistanceCheck::distance_ratio() const {
  return n > 0 ? d / std::pow(static_cast<double>(n), c) : 0.0;
}

DistanceCheck certify_whole_graph(const ConnGraph& g, int d, const LemmaParams& params) {
  DistanceCheck out;
  out.n = g.num_vertices();
  out.d = d;
  out.beta = params.beta;
  out.c = params.c;
  out.epsilon = params.effective_epsilon();
  try {
    Certificate cert = certify_small_boundary_set(g, d, g.all(), params);
    out.certified = true;
    const auto res = check_certificate(g, d, cert);
    out.certificate_valid = res.ok;
    out.reason = res.ok ? "whole vertex set certified" : "checker rejected: " + res.reason;
    out.certificate = std::move(cert);
  } catch (const CertificationError& e) {
    out.reason = e.what();
  }
  return out;
}

DistanceCheck distance_bound_check(const StabilizerCode& code, const LemmaParams& params,
                                   std::optional<int> d) {
  if (code.k < 1) throw InputError("distance_bound_check needs k >= 1");
  const int dist = d ? *d : code_distance(code);
  DistanceCheck out = certify_whole_graph(build_graph(code), dist, params);
  out.k = code.k;
  return out;
}

ScalingFamily parse_scaling_family(const std::string& s) {
  if (s == "grid_graph" || s == "grid") return ScalingFamily::grid_graph;
  if (s == "rotated_surface") return ScalingFamily::rotated_surface;
  if (s == "toric") return ScalingFamily::toric;
  throw InputError("unknown scaling family '" + s + "'");
}

std::string to_string(ScalingFamily f) {
  switch (f) {
    case ScalingFamily::grid_graph: return "grid_graph";
    case ScalingFamily::rotated_surface: return "rotated_surface";
    case ScalingFamily::toric: return "toric";
  }
  return "?";
}

std::string DRule::to_string() const {
  return proportional ? "L" : std::to_string(constant);
}

DRule parse_d_rule(const std::string& text) {
  if (text == "L") return DRule{true, 0};
  std::string digits = text.rfind("const:", 0) == 0 ? text.substr(6) : text;
  try {
    std::size_t used = 0;
    int value = std::stoi(digits, &used);
    if (used == digits.size() && value >= 1) return DRule{false, value};
  } catch (const std::exception&) {
  }
  throw InputError("d rule must be 'L' or a positive integer, got '" + text + "'");
}

namespace {

std::vector<ScalingRow> scaling_for_size(ScalingFamily family, int size, const DRule& rule,
                                         const LemmaParams& params) {
  ScalingRow base;
  base.family = to_string(family);
  base.size = size;
  base.beta = params.beta;
  base.c = params.c;
  base.d = rule.eval(size);
  ConnGraph g;
  try {
    switch (family) {
      case ScalingFamily::grid_graph:
        g = grid_graph(size, size);
        break;
      case ScalingFamily::rotated_surface: {
        auto code = builtin_family(CodeFamily::rotated_surface, size);
        base.k = code.k;
        g = build_graph(code);
        break;
      }
      case ScalingFamily::toric: {
        auto code = builtin_family(CodeFamily::toric, size);
        base.k = code.k;
        g = build_graph(code);
        break;
      }
    }
  } catch (const std::exception& e) {
    base.method = "none";
    base.status = std::string("error: ") + e.what();
    return {base};
  }
  base.n = g.num_vertices();

  auto run = [&](const std::string& method) {
    ScalingRow row = base;
    row.method = method;
    try {
      const TradeoffPartition p = method == "warmup"
                                      ? warmup_abc_partition(g, row.d, params.exact_cap)
                                      : abc_partition(g, row.d, params);
      row.size_a = p.a.size();
      row.size_b = p.b.size();
      row.size_c = p.c_set.size();
      row.first_stage_removed = p.first_stage_removed;
      const bool valid = check_certificate(g, row.d, p.cert_a).ok &&
                         check_certificate(g, row.d, p.cert_b).ok;
      if (!valid) {
        row.status = "invalid-certificate";
      } else if (row.k && *row.k > row.size_c) {
        row.status = "VIOLATION k>|C|";
      } else {
        row.status = "ok";
      }
    } catch (const std::exception& e) {
      row.status = std::string("error: ") + e.what();
    }
    return row;
  };
  return {run("warmup"), run("main")};
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

std::vector<ScalingRow> scaling_experiment(ScalingFamily family, const std::vector<int>& sizes,
                                           const DRule& rule, const LemmaParams& params,
                                           int jobs) {
  validate_profile_params(params.beta, params.c);
  if (sizes.empty()) throw InputError("scaling_experiment needs at least one size");
  std::vector<std::vector<ScalingRow>> per_size(sizes.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      per_size[i] = scaling_for_size(family, sizes[i], rule, params);
    }
  } else {
    for (std::size_t start = 0; start < sizes.size(); start += jobs) {
      std::vector<std::future<std::vector<ScalingRow>>> batch;
      for (std::size_t i = start; i < std::min(sizes.size(), start + jobs); ++i) {
        batch.push_back(std::async(std::launch::async, scaling_for_size, family, sizes[i],
                                   rule, params));
      }
      for (std::size_t j = 0; j < batch.size(); ++j) per_size[start + j] = batch[j].get();
    }
  }
  std::vector<ScalingRow> rows;
  for (auto& chunk : per_size) {
    for (auto& r : chunk) rows.push_back(std::move(r));
  }
  return rows;
}

std::string scaling_csv(const std::vector<ScalingRow>& rows) {
  std::ostringstream out;
  out << kScalingCsvHeader << '\n';
  for (const auto& r : rows) {
    std::string status = r.status;
    std::replace(status.begin(), status.end(), ',', ';');
    std::replace(status.begin(), status.end(), '\n', ' ');
    out << r.family << ',' << r.size << ',' << r.n << ',' << (r.k ? std::to_string(*r.k) : "")
        << ',' << r.d << ',' << format_double(r.beta) << ',' << format_double(r.c) << ','
        << r.method << ',' << r.size_a << ',' << r.size_b << ',' << r.size_c << ','
        << format_double(r.ratio_warmup()) << ',' << format_double(r.ratio_main()) << ','
        << format_double(r.ratio_conjecture()) << ',' << status << '\n';
  }
  return out.str();
}

std::string to_string(SearchMode m) { return m == SearchMode::exact ? "exact" : "heuristic"; }

std::string ExplorerResult::label() const {
  if (best_c <= conjectured_scale) {
    return "consistent with conjectured scale (alpha = 1) at this size";
  }
  return "exceeds conjectured scale (alpha = 1) at this size";
}

ExplorerResult conjecture_search(const ConnGraph& g, int d, double c, SearchMode mode,
                                 std::uint64_t seed, const ExplorerOptions& options) {
  if (!(c > 0.0) || c >= 1.0) throw InputError("conjecture_search needs 0 < c < 1");
  if (d < 1) throw InputError("d must be >= 1");
  const int n = g.num_vertices();
  ExplorerResult out;
  out.descriptor = g.provenance().source.empty() ? "graph:" + g.hash() : g.provenance().source;
  out.n = n;
  out.d = d;
  out.c = c;
  out.mode = mode;
  out.seed = seed;
  out.conjectured_scale = n / std::pow(static_cast<double>(d), exponent_conjecture(c));

  if (mode == SearchMode::exact) {
    if (n > options.exact_max_n) {
      throw CapExceeded("exact conjecture search: n = " + std::to_string(n) + " exceeds cap " +
                        std::to_string(options.exact_max_n));
    }
    const FamilyTable table = brute_force_family(g, d, options.exact_max_n);
    const auto maximal = table.maximal_members();
    std::uint32_t best_a = 0, best_b = 0;
    int best_cover = -1;
    for (std::uint32_t x : maximal) {
      for (std::uint32_t y : maximal) {
        const int cover = std::popcount(x | y);
        if (cover > best_cover) {
          best_cover = cover;
          best_a = x;
          best_b = y & ~x;
        }
      }
    }
    TradeoffPartition p;
    p.method = "exact";
    p.d = d;
    p.c = c;
    p.a = VertexSet::from_mask(n, best_a);
    p.b = VertexSet::from_mask(n, best_b);
    p.c_set = g.all() - p.a - p.b;
    p.cert_a = table.derive(g, best_a);
    p.cert_b = table.derive(g, best_b);
    out.best_c = p.c_set.size();
    out.best = std::move(p);
    return out;
  }

  ProfileOptions profile;
  profile.samples_per_size = options.profile_samples;
  profile.seed = seed;
  const ProfileFit fit = estimate_profile(g, profile);
  LemmaParams params;
  params.beta = fit.beta;
  params.c = c;
  params.exact_cap = options.exact_cap;
  std::vector<std::optional<double>> sweep = {std::nullopt, 0.05, 0.1, 0.25, 0.5, 1.0};

  auto consider = [&](TradeoffPartition p) {
    if (!check_certificate(g, d, p.cert_a).ok || !check_certificate(g, d, p.cert_b).ok) return;
    if (!out.best || p.c_set.size() < out.best->c_set.size()) out.best = std::move(p);
  };
  consider(warmup_abc_partition(g, d, options.exact_cap));
  for (const auto& eps : sweep) {
    params.epsilon = eps;
    try {
      consider(abc_partition(g, d, params));
    } catch (const CertificationError&) {
      // This epsilon is too aggressive for the graph; try the next one.
    }
  }
  out.best_c = out.best->c_set.size();
  return out;
}

}  // namespace qsep
