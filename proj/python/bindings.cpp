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

// Python bindings. Structured results cross the boundary as JSON documents
// and come out as dicts on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qsep/errors.hpp"
#include "qsep/family.hpp"
#include "qsep/serialize.hpp"

namespace py = pybind11;
using namespace qsep;

namespace {

py::object to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Json from_py(const py::object& obj) {
  const std::string text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return parse_json_text(text, "<python>");
}

VertexSet to_set(int n, const std::vector<int>& vertices) {
  VertexSet s(n);
  for (int v : vertices) {
    if (v < 0 || v >= n) throw InputError("vertex " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  return s;
}

LemmaParams lemma_params(double beta, double c, std::optional<double> epsilon) {
  LemmaParams p;
  p.beta = beta;
  p.c = c;
  p.epsilon = epsilon;
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Separator-based correctability certificates and trade-off checks";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<CertificationError>(m, "CertificationError", PyExc_RuntimeError);
  py::register_exception<ProvenanceError>(m, "ProvenanceError", PyExc_RuntimeError);

  py::class_<StabilizerCode>(m, "Code")
      .def_readonly("name", &StabilizerCode::name)
      .def_readonly("n", &StabilizerCode::n)
      .def_readonly("k", &StabilizerCode::k)
      .def_readonly("rank", &StabilizerCode::rank)
      .def_property_readonly("generators",
                             [](const StabilizerCode& c) {
                               std::vector<std::string> out;
                               for (const auto& g : c.generators) out.push_back(g.to_string());
                               return out;
                             })
      .def("__repr__", [](const StabilizerCode& c) {
        return "<Code " + c.name + " n=" + std::to_string(c.n) + " k=" + std::to_string(c.k) + ">";
      });

  m.def(
      "code_from_paulis",
      [](const std::vector<std::string>& words, const std::string& name) {
        std::vector<PauliWord> gens;
        for (const auto& w : words) gens.push_back(parse_pauli(w));
        return build_code(std::move(gens), name);
      },
      py::arg("generators"), py::arg("name") = "");
  m.def(
      "builtin_code",
      [](const std::string& family, int size) {
        return builtin_family(parse_code_family(family), size);
      },
      py::arg("family"), py::arg("size") = 0);
  m.def("code_distance", &code_distance, py::arg("code"), py::arg("max_n") = 12);
  m.def(
      "is_code_correctable",
      [](const StabilizerCode& code, const std::vector<int>& region) {
        return is_code_correctable(code, to_set(code.n, region));
      },
      py::arg("code"), py::arg("region"));

  py::class_<ConnGraph>(m, "Graph")
      .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"),
           py::arg("edges"))
      .def_property_readonly("n", &ConnGraph::num_vertices)
      .def_property_readonly("edges", &ConnGraph::edges)
      .def("hash", &ConnGraph::hash)
      .def("__repr__", [](const ConnGraph& g) {
        return "<Graph n=" + std::to_string(g.num_vertices()) +
               " edges=" + std::to_string(g.num_edges()) + ">";
      });
  m.def("build_graph", &build_graph, py::arg("code"));
  m.def("grid_graph", &grid_graph, py::arg("rows"), py::arg("cols"));
  m.def("path_graph", &path_graph, py::arg("n"));

  m.def(
      "separator",
      [](const ConnGraph& g, bool exact, int cap) {
        return to_py(to_json(exact ? exact_separator(g, cap) : heuristic_separator(g)));
      },
      py::arg("graph"), py::arg("exact") = false, py::arg("cap") = kDefaultExactSeparatorCap);
  m.def(
      "estimate_profile",
      [](const ConnGraph& g, int samples, std::uint64_t seed) {
        ProfileOptions o;
        o.samples_per_size = samples;
        o.seed = seed;
        return to_py(to_json(estimate_profile(g, o)));
      },
      py::arg("graph"), py::arg("samples") = 4, py::arg("seed") = 0);
  m.def(
      "r_division",
      [](const ConnGraph& g, int r, double beta, double c) {
        return to_py(to_json(r_division(g, r, beta, c)));
      },
      py::arg("graph"), py::arg("r"), py::arg("beta") = 1.0, py::arg("c") = 0.5);

  m.def(
      "is_graph_correctable",
      [](const ConnGraph& g, int d, const std::vector<int>& region) {
        return is_graph_correctable(g, d, to_set(g.num_vertices(), region));
      },
      py::arg("graph"), py::arg("d"), py::arg("region"));
  m.def(
      "certify_set",
      [](const ConnGraph& g, int d, const std::vector<int>& region, double beta, double c,
         std::optional<double> epsilon) {
        const auto cert = certify_small_boundary_set(g, d, to_set(g.num_vertices(), region),
                                                     lemma_params(beta, c, epsilon));
        return to_py(to_json(cert, g.num_vertices()));
      },
      py::arg("graph"), py::arg("d"), py::arg("region"), py::arg("beta") = 1.0,
      py::arg("c") = 0.5, py::arg("epsilon") = py::none());
  m.def(
      "abc_partition",
      [](const ConnGraph& g, int d, double beta, double c, std::optional<double> epsilon) {
        return to_py(to_json(abc_partition(g, d, lemma_params(beta, c, epsilon))));
      },
      py::arg("graph"), py::arg("d"), py::arg("beta") = 1.0, py::arg("c") = 0.5,
      py::arg("epsilon") = py::none());
  m.def(
      "warmup_partition",
      [](const ConnGraph& g, int d) { return to_py(to_json(warmup_abc_partition(g, d))); },
      py::arg("graph"), py::arg("d"));
  m.def(
      "check_certificate",
      [](const ConnGraph& g, const py::object& doc) {
        const Json j = from_py(doc);
        const Certificate cert = certificate_from_json(j, g.num_vertices());
        const auto res = check_certificate(g, cert.d, cert);
        return py::make_tuple(res.ok, res.reason);
      },
      py::arg("graph"), py::arg("certificate"));

  m.def(
      "verify_k_bound",
      [](const StabilizerCode& code, const py::object& partition) {
        return to_py(to_json(verify_k_bound(code, tradeoff_partition_from_json(from_py(partition)))));
      },
      py::arg("code"), py::arg("partition"));
  m.def(
      "distance_bound_check",
      [](const StabilizerCode& code, double beta, double c, std::optional<double> epsilon,
         std::optional<int> d) {
        return to_py(to_json(distance_bound_check(code, lemma_params(beta, c, epsilon), d)));
      },
      py::arg("code"), py::arg("beta") = 1.0, py::arg("c") = 0.5,
      py::arg("epsilon") = py::none(), py::arg("d") = py::none());
  m.def(
      "conjecture_search",
      [](const ConnGraph& g, int d, double c, bool exact, std::uint64_t seed) {
        return to_py(to_json(conjecture_search(g, d, c, exact ? SearchMode::exact : SearchMode::heuristic, seed)));
      },
      py::arg("graph"), py::arg("d"), py::arg("c") = 0.5, py::arg("exact") = false,
      py::arg("seed") = 0);
  m.def(
      "scaling_csv",
      [](const std::string& family, const std::vector<int>& sizes, double beta, double c,
         std::optional<double> epsilon, const std::string& d_rule, int jobs) {
        return scaling_csv(scaling_experiment(parse_scaling_family(family), sizes,
                                              parse_d_rule(d_rule),
                                              lemma_params(beta, c, epsilon), jobs));
      },
      py::arg("family"), py::arg("sizes"), py::arg("beta") = 1.0, py::arg("c") = 0.5,
      py::arg("epsilon") = py::none(), py::arg("d_rule") = "L", py::arg("jobs") = 1);
}
