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

#include "qsep/serialize.hpp"

#include <algorithm>

#include "qsep/errors.hpp"

namespace qsep {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

int get_int(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer()) throw InputError(where + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

double get_double(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number()) throw InputError(where + ": field '" + key + "' must be a number");
  return v.get<double>();
}

bool get_bool(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_boolean()) throw InputError(where + ": field '" + key + "' must be a boolean");
  return v.get<bool>();
}

std::string get_string(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_string()) throw InputError(where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

std::optional<bool> get_optional_bool(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (v.is_null()) return std::nullopt;
  if (!v.is_boolean()) throw InputError(where + ": field '" + key + "' must be a boolean or null");
  return v.get<bool>();
}

void check_version(const Json& j, const std::string& where) {
  const int v = get_int(j, "format_version", where);
  if (v != kFormatVersion) {
    throw InputError(where + ": unsupported format_version " + std::to_string(v));
  }
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + upto, '\n');
    throw InputError(source + ":" + std::to_string(line) + ": malformed JSON (" + e.what() + ")");
  }
}

Json set_to_json(const VertexSet& s) { return Json(s.to_vector()); }

VertexSet set_from_json(const Json& j, int n, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an index list");
  VertexSet out(n);
  int prev = -1;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError(where + ": index list holds a non-integer");
    const long long x = v.get<long long>();
    if (x < 0 || x >= n) {
      throw InputError(where + ": index " + std::to_string(x) + " out of range for n = " +
                       std::to_string(n));
    }
    if (x <= prev) throw InputError(where + ": index list must be strictly increasing");
    prev = static_cast<int>(x);
    out.insert(prev);
  }
  return out;
}

Json to_json(const CertNode& node) {
  Json j;
  j["rule"] = to_string(node.rule);
  j["target"] = set_to_json(node.target);
  Json kids = Json::array();
  for (const auto& c : node.children) kids.push_back(to_json(c));
  j["children"] = std::move(kids);
  return j;
}

Json to_json(const Certificate& cert, int n) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["d"] = cert.d;
  j["graph_hash"] = cert.graph_hash;
  j["n"] = n;
  const Json root = to_json(cert.root);
  for (auto& [k, v] : root.items()) j[k] = v;
  return j;
}

CertNode cert_node_from_json(const Json& j, int n, const std::string& path) {
  CertNode node;
  try {
    node.rule = parse_rule(get_string(j, "rule", path));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  node.target = set_from_json(field(j, "target", path), n, path + ".target");
  const Json& kids = field(j, "children", path);
  if (!kids.is_array()) throw InputError(path + ": 'children' must be an array");
  for (std::size_t i = 0; i < kids.size(); ++i) {
    node.children.push_back(cert_node_from_json(kids[i], n, path + "/" + std::to_string(i)));
  }
  return node;
}

int certificate_universe(const Json& j) {
  if (j.is_object() && j.contains("n")) return get_int(j, "n", "certificate");
  return -1;
}

Certificate certificate_from_json(const Json& j, int n) {
  const std::string where = "certificate";
  check_version(j, where);
  const int stored = certificate_universe(j);
  if (stored >= 0) {
    if (n >= 0 && stored != n) {
      throw InputError(where + ": n = " + std::to_string(stored) + " but the graph has " +
                       std::to_string(n) + " vertices");
    }
    n = stored;
  }
  if (n < 0) throw InputError(where + ": universe size unknown");
  Certificate cert;
  cert.d = get_int(j, "d", where);
  cert.graph_hash = get_string(j, "graph_hash", where);
  cert.root = cert_node_from_json(j, n);
  return cert;
}

Json to_json(const SeparatorPartition& p) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["n"] = p.t.universe();
  j["U1"] = set_to_json(p.u1);
  j["T"] = set_to_json(p.t);
  j["U2"] = set_to_json(p.u2);
  return j;
}

SeparatorPartition separator_partition_from_json(const Json& j) {
  const std::string where = "separator";
  check_version(j, where);
  const int n = get_int(j, "n", where);
  return SeparatorPartition{set_from_json(field(j, "U1", where), n, where + ".U1"),
                            set_from_json(field(j, "T", where), n, where + ".T"),
                            set_from_json(field(j, "U2", where), n, where + ".U2")};
}

Json to_json(const ProfileFit& fit) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["beta"] = fit.beta;
  j["c"] = fit.c;
  j["fit_kind"] = to_string(fit.kind);
  j["beta_clamped"] = fit.beta_clamped;
  Json rows = Json::array();
  for (const auto& s : fit.samples) rows.push_back(Json{{"r", s.r}, {"separator", s.separator}});
  j["samples"] = std::move(rows);
  return j;
}

ProfileFit profile_fit_from_json(const Json& j) {
  const std::string where = "profile";
  check_version(j, where);
  ProfileFit fit;
  fit.beta = get_double(j, "beta", where);
  fit.c = get_double(j, "c", where);
  try {
    fit.kind = parse_fit_kind(get_string(j, "fit_kind", where));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(where + ": " + e.what());
  }
  fit.beta_clamped = get_bool(j, "beta_clamped", where);
  const Json& rows = field(j, "samples", where);
  if (!rows.is_array()) throw InputError(where + ": 'samples' must be an array");
  for (const auto& row : rows) {
    fit.samples.push_back({get_int(row, "r", where + ".samples"),
                           get_int(row, "separator", where + ".samples")});
  }
  return fit;
}

Json to_json(const RDivision& div) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["n"] = div.parts.empty() ? 0 : div.parts.front().universe();
  j["r"] = div.r;
  Json parts = Json::array();
  for (const auto& p : div.parts) parts.push_back(set_to_json(p));
  j["parts"] = std::move(parts);
  j["inner_boundary_sizes"] = div.inner_boundary_sizes;
  j["max_inner_boundary"] = div.max_inner_boundary;
  j["alpha_boundary"] = div.alpha_boundary;
  j["alpha_count"] = div.alpha_count;
  return j;
}

RDivision rdivision_from_json(const Json& j) {
  const std::string where = "rdivision";
  check_version(j, where);
  RDivision div;
  const int n = get_int(j, "n", where);
  div.r = get_int(j, "r", where);
  const Json& parts = field(j, "parts", where);
  if (!parts.is_array()) throw InputError(where + ": 'parts' must be an array");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    div.parts.push_back(set_from_json(parts[i], n, where + ".parts[" + std::to_string(i) + "]"));
  }
  const Json& sizes = field(j, "inner_boundary_sizes", where);
  if (!sizes.is_array()) throw InputError(where + ": 'inner_boundary_sizes' must be an array");
  for (const auto& s : sizes) {
    if (!s.is_number_integer()) throw InputError(where + ": boundary sizes must be integers");
    div.inner_boundary_sizes.push_back(s.get<int>());
  }
  div.max_inner_boundary = get_int(j, "max_inner_boundary", where);
  div.alpha_boundary = get_double(j, "alpha_boundary", where);
  div.alpha_count = get_double(j, "alpha_count", where);
  return div;
}

Json to_json(const TradeoffPartition& p) {
  const int n = p.a.universe();
  Json j;
  j["format_version"] = kFormatVersion;
  j["method"] = p.method;
  j["n"] = n;
  j["A"] = set_to_json(p.a);
  j["B"] = set_to_json(p.b);
  j["C"] = set_to_json(p.c_set);
  j["certificate_A"] = to_json(p.cert_a, n);
  j["certificate_B"] = to_json(p.cert_b, n);
  j["parameters"] = Json{{"d", p.d}, {"beta", p.beta}, {"c", p.c}, {"epsilon", p.epsilon}};
  Json measured;
  measured["size_A"] = p.a.size();
  measured["size_B"] = p.b.size();
  measured["size_C"] = p.c_set.size();
  measured["first_stage_removed"] = p.first_stage_removed;
  if (p.c > 0.0 && p.c < 1.0) {
    measured["ratio_warmup"] = size_ratio(p.c_set.size(), p.d, n, exponent_warmup(p.c));
    measured["ratio_main"] = size_ratio(p.c_set.size(), p.d, n, exponent_main(p.c));
    measured["ratio_conj"] = size_ratio(p.c_set.size(), p.d, n, exponent_conjecture(p.c));
  }
  j["measured"] = std::move(measured);
  return j;
}

TradeoffPartition tradeoff_partition_from_json(const Json& j) {
  const std::string where = "partition";
  check_version(j, where);
  TradeoffPartition p;
  p.method = get_string(j, "method", where);
  const int n = get_int(j, "n", where);
  p.a = set_from_json(field(j, "A", where), n, where + ".A");
  p.b = set_from_json(field(j, "B", where), n, where + ".B");
  p.c_set = set_from_json(field(j, "C", where), n, where + ".C");
  p.cert_a = certificate_from_json(field(j, "certificate_A", where), n);
  p.cert_b = certificate_from_json(field(j, "certificate_B", where), n);
  const Json& params = field(j, "parameters", where);
  p.d = get_int(params, "d", where + ".parameters");
  p.beta = get_double(params, "beta", where + ".parameters");
  p.c = get_double(params, "c", where + ".parameters");
  p.epsilon = get_double(params, "epsilon", where + ".parameters");
  p.first_stage_removed = get_int(field(j, "measured", where), "first_stage_removed",
                                  where + ".measured");
  return p;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["code"] = r.code_name;
  j["n"] = r.n;
  j["k"] = r.k;
  j["d"] = r.d;
  j["beta"] = r.beta;
  j["c"] = r.c;
  j["profile_source"] = r.profile_source;
  j["method"] = r.method;
  j["size_A"] = r.size_a;
  j["size_B"] = r.size_b;
  j["size_C"] = r.size_c;
  j["is_partition"] = r.is_partition;
  j["certificate_A_valid"] = r.cert_a_valid;
  j["certificate_B_valid"] = r.cert_b_valid;
  j["certificate_failure"] = r.cert_failure;
  j["A_code_correctable"] = optional_bool(r.a_code_correctable);
  j["B_code_correctable"] = optional_bool(r.b_code_correctable);
  j["verdict"] = to_string(r.verdict());
  j["ratio_warmup"] = r.ratio_warmup();
  j["ratio_main"] = r.ratio_main();
  j["ratio_conj"] = r.ratio_conjecture();
  return j;
}

BoundReport bound_report_from_json(const Json& j) {
  const std::string where = "bound";
  check_version(j, where);
  BoundReport r;
  r.code_name = get_string(j, "code", where);
  r.n = get_int(j, "n", where);
  r.k = get_int(j, "k", where);
  r.d = get_int(j, "d", where);
  r.beta = get_double(j, "beta", where);
  r.c = get_double(j, "c", where);
  r.profile_source = get_string(j, "profile_source", where);
  r.method = get_string(j, "method", where);
  r.size_a = get_int(j, "size_A", where);
  r.size_b = get_int(j, "size_B", where);
  r.size_c = get_int(j, "size_C", where);
  r.is_partition = get_bool(j, "is_partition", where);
  r.cert_a_valid = get_bool(j, "certificate_A_valid", where);
  r.cert_b_valid = get_bool(j, "certificate_B_valid", where);
  r.cert_failure = get_string(j, "certificate_failure", where);
  r.a_code_correctable = get_optional_bool(j, "A_code_correctable", where);
  r.b_code_correctable = get_optional_bool(j, "B_code_correctable", where);
  return r;
}

Json to_json(const DistanceCheck& r) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["n"] = r.n;
  j["k"] = r.k;
  j["d"] = r.d;
  j["beta"] = r.beta;
  j["c"] = r.c;
  j["epsilon"] = r.epsilon;
  j["certified"] = r.certified;
  j["certificate_valid"] = r.certificate_valid;
  j["contradiction"] = r.contradiction();
  j["distance_ratio"] = r.distance_ratio();
  j["reason"] = r.reason;
  j["certificate"] = r.certificate ? to_json(*r.certificate, r.n) : Json(nullptr);
  return j;
}

DistanceCheck distance_check_from_json(const Json& j) {
  const std::string where = "distance_check";
  check_version(j, where);
  DistanceCheck r;
  r.n = get_int(j, "n", where);
  r.k = get_int(j, "k", where);
  r.d = get_int(j, "d", where);
  r.beta = get_double(j, "beta", where);
  r.c = get_double(j, "c", where);
  r.epsilon = get_double(j, "epsilon", where);
  r.certified = get_bool(j, "certified", where);
  r.certificate_valid = get_bool(j, "certificate_valid", where);
  r.reason = get_string(j, "reason", where);
  const Json& cert = field(j, "certificate", where);
  if (!cert.is_null()) r.certificate = certificate_from_json(cert, r.n);
  return r;
}

Json to_json(const ExplorerResult& r) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["graph"] = r.descriptor;
  j["n"] = r.n;
  j["d"] = r.d;
  j["c"] = r.c;
  j["mode"] = to_string(r.mode);
  j["seed"] = r.seed;
  j["best_C"] = r.best_c;
  j["conjectured_scale"] = r.conjectured_scale;
  j["label"] = r.label();
  j["best_partition"] = r.best ? to_json(*r.best) : Json(nullptr);
  return j;
}

ExplorerResult explorer_result_from_json(const Json& j) {
  const std::string where = "explore";
  check_version(j, where);
  ExplorerResult r;
  r.descriptor = get_string(j, "graph", where);
  r.n = get_int(j, "n", where);
  r.d = get_int(j, "d", where);
  r.c = get_double(j, "c", where);
  const std::string mode = get_string(j, "mode", where);
  if (mode == "exact") {
    r.mode = SearchMode::exact;
  } else if (mode == "heuristic") {
    r.mode = SearchMode::heuristic;
  } else {
    throw InputError(where + ": unknown mode '" + mode + "'");
  }
  const Json& seed = field(j, "seed", where);
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
    throw InputError(where + ": 'seed' must be an integer");
  }
  r.seed = seed.get<std::uint64_t>();
  r.best_c = get_int(j, "best_C", where);
  r.conjectured_scale = get_double(j, "conjectured_scale", where);
  const Json& best = field(j, "best_partition", where);
  if (!best.is_null()) r.best = tradeoff_partition_from_json(best);
  return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qsep
