/*
 * Copyright 2026 The zxsearch Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <pybind11/chrono.h>
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "zxsearch/circuit.hpp"
#include "zxsearch/graph_like.hpp"
#include "zxsearch/metric.hpp"
#include "zxsearch/oracle.hpp"
#include "zxsearch/qasm.hpp"
#include "zxsearch/rules.hpp"
#include "zxsearch/search.hpp"
#include "zxsearch/serialize.hpp"

namespace py = pybind11;
using namespace zxsearch;

namespace {

void bind_phase(py::module_& m) {
    py::class_<Phase>(m, "Phase", "Rational multiple of pi, kept in [0, 2).")
        .def(py::init<std::int64_t, std::int64_t>(), py::arg("numerator") = 0, py::arg("denominator") = 1)
        .def_static("parse", [](const std::string& s) { return Phase::parse(s); })
        .def_property_readonly("numerator", &Phase::numerator)
        .def_property_readonly("denominator", &Phase::denominator)
        .def_property_readonly("radians", &Phase::radians)
        .def("is_zero", &Phase::is_zero)
        .def("is_pauli", &Phase::is_pauli)
        .def("is_clifford", &Phase::is_clifford)
        .def("is_proper_clifford", &Phase::is_proper_clifford)
        .def("is_t", &Phase::is_t)
        .def("__add__", [](Phase a, Phase b) { return a + b; })
        .def("__sub__", [](Phase a, Phase b) { return a - b; })
        .def("__neg__", [](Phase a) { return -a; })
        .def("__eq__", [](Phase a, Phase b) { return a == b; })
        .def("__hash__", [](Phase a) { return py::hash(py::make_tuple(a.numerator(), a.denominator())); })
        .def("__str__", &Phase::str)
        .def("__repr__", [](Phase a) { return "Phase(" + a.str() + ")"; });
}

void bind_diagram(py::module_& m) {
    py::enum_<VertexKind>(m, "VertexKind")
        .value("Z", VertexKind::Z)
        .value("X", VertexKind::X)
        .value("BOUNDARY", VertexKind::Boundary);
    py::enum_<EdgeType>(m, "EdgeType").value("PLAIN", EdgeType::Plain).value("HADAMARD", EdgeType::Hadamard);

    py::class_<Diagram>(m, "Diagram")
        .def(py::init<>())
        .def("add_vertex", &Diagram::add_vertex, py::arg("kind"), py::arg("phase") = Phase())
        .def("add_input", &Diagram::add_input)
        .def("add_output", &Diagram::add_output)
        .def("add_edge", &Diagram::add_edge)
        .def("connect", &Diagram::connect, "Add an edge, reducing parallel edges and self-loops.")
        .def("remove_edge", &Diagram::remove_edge)
        .def("remove_vertex", &Diagram::remove_vertex)
        .def("kind", &Diagram::kind)
        .def("phase", &Diagram::phase)
        .def("set_phase", &Diagram::set_phase)
        .def("edge_type", &Diagram::edge_type)
        .def("neighbours",
             [](const Diagram& d, VertexId v) {
                 std::vector<std::pair<VertexId, EdgeType>> out;
                 for (auto n : d.neighbours(v)) out.emplace_back(n.id, n.type);
                 return out;
             })
        .def("vertices", &Diagram::vertices)
        .def("edges",
             [](const Diagram& d) {
                 std::vector<std::tuple<VertexId, VertexId, EdgeType>> out;
                 for (const auto& e : d.edges()) out.emplace_back(e.src, e.dst, e.type);
                 return out;
             })
        .def_property_readonly("inputs", &Diagram::inputs)
        .def_property_readonly("outputs", &Diagram::outputs)
        .def_property_readonly("num_vertices", &Diagram::num_vertices)
        .def_property_readonly("num_edges", &Diagram::num_edges)
        .def_property_readonly("num_spiders", &Diagram::num_spiders)
        .def("validate", &Diagram::validate)
        .def("copy", [](const Diagram& d) { return Diagram(d); })
        .def("to_json", [](const Diagram& d) { return serialize(d); })
        .def_static("from_json", [](const std::string& s) { return deserialize(s); })
        .def("fingerprint", [](const Diagram& d) { return fingerprint(d); })
        .def("__eq__", [](const Diagram& a, const Diagram& b) { return a == b; });

    m.def("colour_change", [](Diagram d, VertexId v) {
        colour_change(d, v);
        return d;
    });
    m.def("is_graph_like", &is_graph_like);
    m.def("to_graph_like", &to_graph_like);
}

void bind_metrics(py::module_& m) {
    py::enum_<Metric>(m, "Metric")
        .value("TCOUNT", Metric::TCount)
        .value("EDGES", Metric::EdgeCount)
        .value("SPIDERS", Metric::SpiderCount);
    m.def("t_count", &t_count);
    m.def("edge_count", &edge_count);
    m.def("spider_count", &spider_count);
    m.def("metric_value", &metric_value);
}

void bind_circuits(py::module_& m) {
    py::class_<Circuit>(m, "Circuit")
        .def_readonly("num_qubits", &Circuit::num_qubits)
        .def_property_readonly("gates",
                               [](const Circuit& c) {
                                   std::vector<std::tuple<std::string, std::vector<int>, std::optional<Phase>>> out;
                                   for (const auto& g : c.gates) out.emplace_back(gate_name(g.kind), g.qubits, g.phase);
                                   return out;
                               })
        .def("__len__", [](const Circuit& c) { return c.gates.size(); });
    m.def("parse_qasm", [](const std::string& s) { return parse_qasm(s); });
    m.def("print_qasm", &print_qasm);
    m.def("circuit_to_zx", &circuit_to_zx);
    m.def("unitary_of_circuit", &unitary_of_circuit, py::arg("circuit"), py::arg("max_qubits") = kMaxUnitaryQubits);
}

void bind_rules(py::module_& m) {
    py::enum_<RuleId> rule(m, "Rule");
    for (RuleId r : all_rules()) {
        std::string name = short_name(r);
        for (auto& ch : name) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        rule.value(name.c_str(), r);
    }
    rule.def_property_readonly("short_name", [](RuleId r) { return std::string(short_name(r)); });

    py::class_<Rewrite>(m, "Rewrite")
        .def_readonly("rule", &Rewrite::rule)
        .def_readonly("site", &Rewrite::site)
        .def("__repr__", [](const Rewrite& rw) {
            std::ostringstream s;
            s << "Rewrite(" << short_name(rw.rule) << ", [";
            for (std::size_t i = 0; i < rw.site.size(); ++i) s << (i ? ", " : "") << rw.site[i];
            s << "])";
            return s.str();
        });
    m.def("all_rules", [] { return std::vector<RuleId>(all_rules().begin(), all_rules().end()); });
    m.def("find_matches", &find_matches);
    m.def("apply", &apply);
    m.def("apply_bundled", &apply_bundled);
}

void bind_oracle(py::module_& m) {
    m.def(
        "tensor_of_diagram",
        [](const Diagram& d, int max_boundaries, int max_rank) {
            return tensor_of_diagram(d, TensorBudget{max_boundaries, max_rank});
        },
        py::arg("diagram"), py::arg("max_boundaries") = 12, py::arg("max_rank") = 16);
    m.def(
        "compare_up_to_scalar",
        [](const LinearMap& a, const LinearMap& b, double tol) {
            auto c = compare_up_to_scalar(a, b, tol);
            return py::make_tuple(c.equal, c.lambda, c.residual);
        },
        py::arg("a"), py::arg("b"), py::arg("tol") = kDefaultTolerance);
    m.def("equal_up_to_scalar", &equal_up_to_scalar, py::arg("a"), py::arg("b"), py::arg("tol") = kDefaultTolerance);
    m.def("gflow_exists", &gflow_exists);
}

void bind_search(py::module_& m) {
    py::enum_<Strategy>(m, "Strategy").value("DFS", Strategy::DFS).value("IDDFS", Strategy::IDDFS);
    py::enum_<Extractability>(m, "Extractability")
        .value("ALWAYS", Extractability::AlwaysTrue)
        .value("GFLOW", Extractability::Gflow);
    py::enum_<Termination>(m, "Termination")
        .value("DEPTH_EXHAUSTED", Termination::DepthExhausted)
        .value("TIME_LIMIT", Termination::TimeLimit);

    py::class_<SearchConfig>(m, "SearchConfig")
        .def(py::init<>())
        .def_readwrite("strategy", &SearchConfig::strategy)
        .def_readwrite("metric", &SearchConfig::metric)
        .def_readwrite("depth_limit", &SearchConfig::depth_limit)
        .def_readwrite("time_limit", &SearchConfig::time_limit)
        .def_readwrite("rule_order", &SearchConfig::rule_order)
        .def_readwrite("hd_budget", &SearchConfig::hd_budget)
        .def_readwrite("extractability", &SearchConfig::extractability)
        .def_readwrite("normalize_root", &SearchConfig::normalize_root)
        .def("validate", &SearchConfig::validate);

    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("best", &SearchResult::best)
        .def_readonly("best_value", &SearchResult::best_value)
        .def_readonly("nodes_expanded", &SearchResult::nodes_expanded)
        .def_readonly("leaves_evaluated", &SearchResult::leaves_evaluated)
        .def_readonly("terminated_by", &SearchResult::terminated_by)
        .def_property_readonly("trace", [](const SearchResult& r) {
            std::vector<std::tuple<std::int64_t, int, std::uint64_t>> out;
            for (const auto& p : r.trace) out.emplace_back(p.elapsed_ms, p.best_value, p.nodes_expanded);
            return out;
        });

    m.def("default_rule_order", &default_rule_order);
    m.def("search", &search, py::arg("diagram"), py::arg("config") = SearchConfig(),
          py::call_guard<py::gil_scoped_release>());
    m.def("brute_force_min", &brute_force_min, py::arg("diagram"), py::arg("config"),
          py::arg("max_states") = 100000);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "ZX-diagram rewriting and bounded rewrite search.";
    py::register_exception<DiagramError>(m, "DiagramError", PyExc_ValueError);
    py::register_exception<QasmError>(m, "QasmError", PyExc_ValueError);
    py::register_exception<OracleBudgetError>(m, "OracleBudgetError", PyExc_ValueError);
    py::register_exception<StaleRewrite>(m, "StaleRewrite", PyExc_ValueError);
    bind_phase(m);
    bind_diagram(m);
    bind_metrics(m);
    bind_circuits(m);
    bind_rules(m);
    bind_oracle(m);
    bind_search(m);
}
