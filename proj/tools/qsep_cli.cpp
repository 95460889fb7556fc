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

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsep/errors.hpp"
#include "qsep/family.hpp"
#include "qsep/serialize.hpp"

using namespace qsep;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot write");
  out << text;
}

// Prefixes parser diagnostics ("line N: ...") with the file name.
template <typename F>
auto with_source(const std::string& path, F&& parse) {
  try {
    return parse();
  } catch (const InputError& e) {
    throw InputError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

// Edge lists start with an integer header; anything else is read as a code
// file and turned into its connectivity graph.
bool looks_like_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return std::isdigit(static_cast<unsigned char>(line[pos])) != 0;
  }
  return true;
}

StabilizerCode load_code(const std::string& path) {
  const std::string text = read_input(path);
  return with_source(path, [&] {
    std::istringstream in(text);
    return read_code(in);
  });
}

ConnGraph load_graph(const std::string& path) {
  const std::string text = read_input(path);
  return with_source(path, [&] {
    std::istringstream in(text);
    if (looks_like_edge_list(text)) return read_edge_list(in);
    return build_graph(read_code(in));
  });
}

// "family:L" or a builtin family name; otherwise a graph file.
bool parse_family_descriptor(const std::string& text, ConnGraph& g) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  int size = 0;
  if (colon != std::string::npos) {
    try {
      size = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
      throw InputError("bad family size in '" + text + "'");
    }
  }
  if (name == "grid" || name == "grid_graph") {
    if (size < 1) throw InputError("grid needs a size, e.g. grid:3");
    g = grid_graph(size, size);
    return true;
  }
  if (name == "path") {
    if (size < 1) throw InputError("path needs a size, e.g. path:8");
    g = path_graph(size);
    return true;
  }
  if (colon == std::string::npos) return false;
  g = build_graph(builtin_family(parse_code_family(name), size));
  return true;
}

VertexSet parse_index_list(const std::string& text, int n) {
  VertexSet s(n);
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
    }
    if (used != token.size() || v < 0 || v >= n) {
      throw InputError("--set: bad vertex '" + token + "' (n = " + std::to_string(n) + ")");
    }
    s.insert(v);
  }
  return s;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != token.size()) {
      throw InputError(std::string(what) + ": bad integer '" + token + "'");
    }
    out.push_back(v);
  }
  return out;
}

Json epsilon_json(const LemmaParams& p) {
  return p.epsilon ? Json(*p.epsilon) : Json("default");
}

std::string emit(Json doc, Json config) {
  config["format_version"] = kFormatVersion;
  doc["config"] = std::move(config);
  return dump(doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separator-based trade-off bounds for stabilizer codes"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output = "-";
  app.add_option("-o,--output", output, "Output path, '-' for stdout");
  int format_version = kFormatVersion;
  app.add_option("--format-version", format_version, "Pinned output format version");

  std::string input, second;
  int size = 3, d = 0, r = 0, samples = 4, jobs = 1, exact_cap = kDefaultExactSeparatorCap;
  double beta = 1.0, c = 0.5;
  std::optional<double> epsilon;
  std::uint64_t seed = 0;
  bool flag_dot = false, flag_edges = false, flag_exact = false, flag_heuristic = false;
  bool flag_abc = false, flag_warmup = false;
  std::string set_text, family_name, sizes_text, d_rule_text = "L", method = "main";

  auto* gen = app.add_subcommand("gen-code", "Write a builtin stabilizer code");
  gen->add_option("family", family_name, "repetition|five_qubit|steane|rotated_surface|toric")
      ->required();
  gen->add_option("--L", size, "Size parameter");

  auto* graph = app.add_subcommand("graph", "Connectivity graph of a code");
  graph->add_option("code", input)->required();
  graph->add_flag("--dot", flag_dot);
  graph->add_flag("--edges", flag_edges);

  auto* sep = app.add_subcommand("sep", "Balanced separator");
  sep->add_option("graph", input)->required();
  sep->add_flag("--exact", flag_exact);
  sep->add_flag("--heuristic", flag_heuristic);
  sep->add_option("--cap", exact_cap, "Largest n searched exactly");

  auto* profile = app.add_subcommand("profile", "Fit a separation profile");
  profile->add_option("graph", input)->required();
  profile->add_option("--samples", samples);
  profile->add_option("--seed", seed);

  auto* rdiv = app.add_subcommand("rdivision", "Build an r-division");
  rdiv->add_option("graph", input)->required();
  rdiv->add_option("-r", r)->required();
  rdiv->add_option("--beta", beta);
  rdiv->add_option("--c", c);

  auto* certify = app.add_subcommand("certify", "Emit a correctability certificate");
  certify->add_option("graph", input)->required();
  certify->add_option("-d", d)->required();
  certify->add_option("--set", set_text, "Comma separated vertex list");
  certify->add_flag("--abc", flag_abc);
  certify->add_flag("--warmup", flag_warmup);
  certify->add_option("--beta", beta);
  certify->add_option("--c", c);
  certify->add_option("--epsilon", epsilon);
  certify->add_option("--cap", exact_cap);

  auto* check = app.add_subcommand("check-cert", "Check a certificate or partition");
  check->add_option("graph", input)->required();
  check->add_option("cert", second)->required();

  auto* bound = app.add_subcommand("bound", "Check k <= |C| on a code");
  bound->add_option("code", input)->required();
  bound->add_option("--beta", beta);
  bound->add_option("--c", c);
  bound->add_option("--epsilon", epsilon);
  bound->add_option("-d", d, "Distance (default: brute force)");
  bound->add_option("--method", method, "main|warmup");

  auto* distance = app.add_subcommand("distance", "Brute-force code distance");
  distance->add_option("code", input)->required();
  bool distance_check = false;
  distance->add_flag("--check", distance_check, "Try to certify V with --beta/--c");
  distance->add_option("--beta", beta);
  distance->add_option("--c", c);
  distance->add_option("--epsilon", epsilon);
  distance->add_option("-d", d, "Claimed distance for --check");

  auto* oracle = app.add_subcommand("oracle", "Code-level erasure correctability");
  oracle->add_option("code", input)->required();
  oracle->add_option("--set", set_text)->required();

  auto* explore = app.add_subcommand("explore", "Search for small C partitions");
  explore->add_option("graph", input, "Graph file or family:L")->required();
  explore->add_option("-d", d)->required();
  explore->add_option("--c", c);
  explore->add_flag("--exact", flag_exact);
  explore->add_option("--seed", seed);
  explore->add_option("--samples", samples);

  auto* scaling = app.add_subcommand("scaling", "Partition sizes across a family");
  scaling->add_option("--family", family_name)->required();
  scaling->add_option("--sizes", sizes_text, "Comma separated L values")->required();
  scaling->add_option("--c", c);
  scaling->add_option("--beta", beta);
  scaling->add_option("--epsilon", epsilon);
  scaling->add_option("--d-rule", d_rule_text, "L or a constant");
  scaling->add_option("--jobs", jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (format_version != kFormatVersion) {
      throw InputError("unsupported --format-version " + std::to_string(format_version));
    }
    LemmaParams params;
    params.beta = beta;
    params.c = c;
    params.epsilon = epsilon;
    params.exact_cap = exact_cap;

    if (*gen) {
      const auto code = builtin_family(parse_code_family(family_name), size);
      std::ostringstream out;
      write_code(out, code);
      write_output(output, out.str());
      std::cerr << code.name << ": n = " << code.n << ", k = " << code.k << "\n";
      return kExitOk;
    }
    if (*graph) {
      const ConnGraph g = build_graph(load_code(input));
      std::ostringstream out;
      if (flag_dot) {
        write_dot(out, g);
      } else {
        write_edge_list(out, g);
      }
      write_output(output, out.str());
      std::cerr << "graph: n = " << g.num_vertices() << ", m = " << g.num_edges()
                << ", hash " << g.hash() << "\n";
      return kExitOk;
    }
    if (*sep) {
      const ConnGraph g = load_graph(input);
      bool used_exact = false;
      SeparatorPartition p;
      if (flag_exact) {
        p = exact_separator(g, exact_cap);
        used_exact = true;
      } else if (flag_heuristic) {
        p = heuristic_separator(g);
      } else {
        p = find_separator(g, exact_cap, &used_exact);
      }
      const auto report = verify_separator(g, p);
      Json doc = to_json(p);
      doc["method"] = used_exact ? "exact" : "heuristic";
      doc["valid"] = report.valid;
      write_output(output, emit(doc, {{"subcommand", "sep"}, {"input", input},
                                      {"exact_cap", exact_cap}}));
      std::cerr << "separator |T| = " << p.t.size() << " (" << doc["method"].get<std::string>()
                << ")\n";
      return report.valid ? kExitOk : kExitFail;
    }
    if (*profile) {
      const ConnGraph g = load_graph(input);
      ProfileOptions opts;
      opts.samples_per_size = samples;
      opts.seed = seed;
      const auto fit = estimate_profile(g, opts);
      write_output(output, emit(to_json(fit), {{"subcommand", "profile"}, {"input", input},
                                               {"samples", samples}, {"seed", seed}}));
      std::cerr << "profile: beta = " << fit.beta << ", c = " << fit.c << "\n";
      return kExitOk;
    }
    if (*rdiv) {
      const ConnGraph g = load_graph(input);
      const auto div = r_division(g, r, beta, c, exact_cap);
      write_output(output, emit(to_json(div), {{"subcommand", "rdivision"}, {"input", input},
                                               {"r", r}, {"beta", beta}, {"c", c}}));
      std::cerr << "r-division: " << div.parts.size() << " parts, max inner boundary "
                << div.max_inner_boundary << "\n";
      return kExitOk;
    }
    if (*certify) {
      const ConnGraph g = load_graph(input);
      Json config = {{"subcommand", "certify"}, {"input", input}, {"d", d},
                     {"beta", beta}, {"c", c}, {"epsilon", epsilon_json(params)}};
      try {
        if (flag_abc || flag_warmup) {
          const auto p = flag_warmup ? warmup_abc_partition(g, d, exact_cap)
                                     : abc_partition(g, d, params);
          config["mode"] = p.method;
          write_output(output, emit(to_json(p), config));
          std::cerr << p.method << " partition: |A| = " << p.a.size() << ", |B| = "
                    << p.b.size() << ", |C| = " << p.c_set.size() << "\n";
          return kExitOk;
        }
        if (!set_text.empty()) {
          const auto cert =
              certify_small_boundary_set(g, d, parse_index_list(set_text, g.num_vertices()),
                                         params);
          config["mode"] = "set";
          write_output(output, emit(to_json(cert, g.num_vertices()), config));
          std::cerr << "certified " << cert.target().to_string() << "\n";
          return kExitOk;
        }
        const auto big = big_correctable_set(g, d, params);
        config["mode"] = "big";
        config["r"] = big.r;
        config["A"] = set_to_json(big.a);
        write_output(output, emit(to_json(big.certificate, g.num_vertices()), config));
        std::cerr << "certified |A| = " << big.a.size() << " with r = " << big.r << "\n";
        return kExitOk;
      } catch (const CertificationError& e) {
        std::cerr << "certification failed: " << e.what() << "\n";
        return kExitFail;
      }
    }
    if (*check) {
      const ConnGraph g = load_graph(input);
      const std::string text = read_input(second);
      const Json doc = parse_json_text(text, second);
      std::vector<std::pair<std::string, Certificate>> certs;
      with_source(second, [&] {
        if (doc.is_object() && doc.contains("certificate_A")) {
          const auto p = tradeoff_partition_from_json(doc);
          certs.emplace_back("certificate_A", p.cert_a);
          certs.emplace_back("certificate_B", p.cert_b);
        } else {
          certs.emplace_back("certificate", certificate_from_json(doc, g.num_vertices()));
        }
        return 0;
      });
      Json results = Json::array();
      bool all_ok = true;
      for (const auto& [label, cert] : certs) {
        Json row{{"name", label}};
        try {
          const auto res = check_certificate(g, cert.d, cert);
          row["ok"] = res.ok;
          row["path"] = res.path;
          row["reason"] = res.reason;
          row["nodes_checked"] = res.nodes_checked;
          all_ok = all_ok && res.ok;
        } catch (const ProvenanceError& e) {
          row["ok"] = false;
          row["path"] = "root";
          row["reason"] = e.what();
          row["nodes_checked"] = 0;
          all_ok = false;
        }
        std::cerr << label << ": " << (row["ok"].get<bool>() ? "OK" : "REJECTED");
        if (!row["ok"].get<bool>()) {
          std::cerr << " at " << row["path"].get<std::string>() << ": "
                    << row["reason"].get<std::string>();
        }
        std::cerr << "\n";
        results.push_back(std::move(row));
      }
      Json out{{"format_version", kFormatVersion}, {"ok", all_ok}, {"results", results}};
      write_output(output, emit(out, {{"subcommand", "check-cert"}, {"graph", input},
                                      {"certificate", second}}));
      return all_ok ? kExitOk : kExitFail;
    }
    if (*bound) {
      const auto code = load_code(input);
      const ConnGraph g = build_graph(code);
      const int dist = d > 0 ? d : code_distance(code);
      TradeoffPartition p;
      try {
        p = method == "warmup" ? warmup_abc_partition(g, dist, exact_cap)
                               : abc_partition(g, dist, params);
      } catch (const CertificationError& e) {
        std::cerr << "partition failed: " << e.what() << "\n";
        return kExitFail;
      }
      const auto report = verify_k_bound(code, p);
      Json doc = to_json(report);
      doc["partition"] = to_json(p);
      write_output(output, emit(doc, {{"subcommand", "bound"}, {"input", input}, {"d", dist},
                                      {"beta", beta}, {"c", c}, {"method", method},
                                      {"epsilon", epsilon_json(params)}}));
      std::cerr << code.name << ": k = " << report.k << ", |C| = " << report.size_c << ", "
                << to_string(report.verdict()) << "\n";
      return report.verdict() == Verdict::pass ? kExitOk : kExitFail;
    }
    if (*distance) {
      const auto code = load_code(input);
      if (!distance_check) {
        const int dist = code_distance(code);
        write_output(output, std::to_string(dist) + "\n");
        std::cerr << code.name << ": [[" << code.n << "," << code.k << "," << dist << "]]\n";
        return kExitOk;
      }
      const auto report = distance_bound_check(code, params,
                                               d > 0 ? std::optional<int>(d) : std::nullopt);
      write_output(output, emit(to_json(report), {{"subcommand", "distance"}, {"input", input},
                                                  {"beta", beta}, {"c", c},
                                                  {"epsilon", epsilon_json(params)}}));
      std::cerr << (report.contradiction() ? "CONTRADICTION: " : "no contradiction: ")
                << report.reason << "\n";
      return kExitOk;
    }
    if (*oracle) {
      const auto code = load_code(input);
      const VertexSet s = parse_index_list(set_text, code.n);
      const bool ok = is_code_correctable(code, s);
      Json doc{{"format_version", kFormatVersion}, {"set", set_to_json(s)},
               {"code_correctable", ok}};
      write_output(output, emit(doc, {{"subcommand", "oracle"}, {"input", input}}));
      std::cerr << s.to_string() << (ok ? " is" : " is not") << " correctable\n";
      return kExitOk;
    }
    if (*explore) {
      ConnGraph g;
      std::string descriptor = input;
      if (!parse_family_descriptor(input, g)) g = load_graph(input);
      ExplorerOptions opts;
      opts.profile_samples = samples;
      auto result = conjecture_search(g, d, c, flag_exact ? SearchMode::exact
                                                          : SearchMode::heuristic,
                                      seed, opts);
      result.descriptor = descriptor;
      write_output(output, emit(to_json(result), {{"subcommand", "explore"}, {"input", input},
                                                  {"d", d}, {"c", c}, {"seed", seed},
                                                  {"samples", samples}}));
      std::cerr << "best |C| = " << result.best_c << ", conjectured scale "
                << result.conjectured_scale << ": " << result.label() << "\n";
      return kExitOk;
    }
    if (*scaling) {
      const auto rows = scaling_experiment(parse_scaling_family(family_name),
                                           parse_int_list(sizes_text, "--sizes"),
                                           parse_d_rule(d_rule_text), params, jobs);
      write_output(output, scaling_csv(rows));
      Json config{{"subcommand", "scaling"}, {"family", family_name}, {"sizes", sizes_text},
                  {"d_rule", d_rule_text}, {"beta", beta}, {"c", c},
                  {"epsilon", epsilon_json(params)}, {"format_version", kFormatVersion}};
      std::cerr << "config " << config.dump() << "\n";
      return kExitOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CertificationError& e) {
    std::cerr << "certification failed: " << e.what() << "\n";
    return kExitFail;
  } catch (const ProvenanceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
