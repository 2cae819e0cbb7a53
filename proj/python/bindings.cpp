// Python bindings. Results cross the boundary as the same JSON documents the
// CLI writes; the pypnc package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "pnc/oracles.hpp"
#include "pnc/pipeline.hpp"
#include "pnc/report.hpp"

namespace py = pybind11;
using namespace pnc;

namespace {

using GraphPtr = std::shared_ptr<CubicGraph>;

GraphPtr make(CubicGraph g) { return std::make_shared<CubicGraph>(std::move(g)); }

std::string color_json(const CubicGraph& g, const std::string& name, bool repair, long long budget_mu3) {
  PncOptions opt;
  opt.repair = repair;
  opt.mu3_budget = budget_mu3;
  const PncResult r = color_partially_normal(g, opt);
  Json j = result_to_json(name, g, r);
  j["verify"] = verify_to_json(verify_pnc(g, r));
  return j.dump();
}

std::string mu3_json(const CubicGraph& g, long long budget) {
  const Mu3Result r = compute_mu3(g, budget);
  Json j;
  j["mu3"] = r.mu3;
  j["exact"] = r.exact;
  j["matchings"] = r.matchings;
  j["triples_examined"] = r.triples_examined;
  j["core"] = core_to_json(r.witness);
  return j.dump();
}

std::string oracle_json(const CubicGraph& g, const std::string& kind, long long budget) {
  Json j;
  j["oracle"] = kind;
  if (kind == "normal") {
    const NormalSearch s = brute_force_normal(g, budget);
    j["status"] = to_string(s.status);
    j["nodes"] = s.nodes;
    j["coloring"] = s.coloring ? coloring_to_json(*s.coloring) : Json();
  } else if (kind == "petersen") {
    const PetersenSearch s = petersen_coloring(g, budget);
    j["status"] = to_string(s.status);
    j["nodes"] = s.nodes;
    j["edge_map"] = s.mapping ? Json(s.mapping->edge_map) : Json();
  } else if (kind == "maxnormal") {
    const MaxNormalResult s = max_normal_brute(g, budget);
    j["status"] = to_string(s.status);
    j["nodes"] = s.nodes;
    j["count"] = s.count;
    j["coloring"] = s.witness ? coloring_to_json(*s.witness) : Json();
  } else {
    throw py::value_error("unknown oracle '" + kind + "'");
  }
  return j.dump();
}

std::string verify_json(const CubicGraph& g, const std::string& result) {
  Json parsed;
  try {
    parsed = Json::parse(result);
  } catch (const Json::parse_error& ex) {
    throw ReportError(ex.what());
  }
  return verify_to_json(verify_stored(g, parse_result(parsed))).dump();
}

}  // namespace

PYBIND11_MODULE(_pnc, m) {
  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ReportError>(m, "ReportError", PyExc_ValueError);
  py::register_exception<PncError>(m, "PncError", PyExc_RuntimeError);

  py::class_<CubicGraph, GraphPtr>(m, "Graph")
      .def_static("from_graph6", [](const std::string& s) { return make(parse_graph6(s)); })
      .def_static("from_edgelist", [](const std::string& s) { return make(parse_edgelist(s)); })
      .def_static("generate", [](const std::string& family, int param) {
        return make(generate_graph(family_from_name(family), param));
      }, py::arg("family"), py::arg("param") = 0)
      .def_property_readonly("n", &CubicGraph::num_vertices)
      .def_property_readonly("m", &CubicGraph::num_edges)
      .def("edges", [](const CubicGraph& g) {
        std::vector<std::pair<int, int>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def("graph6", [](const CubicGraph& g) { return to_graph6(g); })
      .def("edgelist", [](const CubicGraph& g) { return to_edgelist(g); })
      .def("is_bridgeless", [](const CubicGraph& g) { return validate(g).is_bridgeless; });

  m.def("parse_graph6_lines", [](const std::string& text) {
    std::vector<GraphPtr> out;
    for (CubicGraph& g : parse_graph6_lines(text)) out.push_back(make(std::move(g)));
    return out;
  });
  m.def("_color", &color_json, py::arg("graph"), py::arg("name"), py::arg("repair") = true,
        py::arg("budget_mu3") = kDefaultMu3Budget, py::call_guard<py::gil_scoped_release>());
  m.def("_mu3", &mu3_json, py::arg("graph"), py::arg("budget") = kDefaultMu3Budget,
        py::call_guard<py::gil_scoped_release>());
  m.def("_oracle", &oracle_json, py::arg("graph"), py::arg("kind"), py::arg("budget") = kDefaultOracleBudget,
        py::call_guard<py::gil_scoped_release>());
  m.def("_verify", &verify_json, py::arg("graph"), py::arg("result"));
  m.def("_dot", [](const CubicGraph& g, const std::string& name, const std::vector<int>& colors,
                   const std::vector<int>& abnormal) {
    return to_dot(name, g, PartialColoring(g, colors), sorted_unique(abnormal));
  });
}
