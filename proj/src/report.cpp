#include "pnc/report.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace pnc {

namespace {

Json circuit_json(const Circuit& c) { return Json{{"vertices", c.vertices}, {"edges", c.edges}}; }

Json path_json(const PathSeg& p) { return Json{{"vertices", p.vertices}, {"edges", p.edges}}; }

Json edges_json(const CubicGraph& g) {
  Json out = Json::array();
  for (const Edge& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ReportError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ReportError(std::string("field '") + key + "' has the wrong type");
  }
}

template <typename T>
std::optional<T> nullable(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return field<T>(j, key);
}

// perm[i] is the graph edge matching stored edge i; parallel edges pair up in
// order.
std::optional<std::vector<EdgeId>> match_edges(const CubicGraph& g, const std::vector<std::array<int, 2>>& edges) {
  if (static_cast<int>(edges.size()) != g.num_edges()) return std::nullopt;
  std::map<std::pair<int, int>, std::vector<EdgeId>> by_ends;
  for (EdgeId e = g.num_edges() - 1; e >= 0; --e) {
    by_ends[std::minmax(g.edge(e).u, g.edge(e).v)].push_back(e);
  }
  std::vector<EdgeId> perm;
  for (const auto& [a, b] : edges) {
    auto it = by_ends.find(std::minmax(a, b));
    if (it == by_ends.end() || it->second.empty()) return std::nullopt;
    perm.push_back(it->second.back());
    it->second.pop_back();
  }
  return perm;
}

StoredResult renumber(const StoredResult& r, const std::vector<EdgeId>& perm) {
  const int m = static_cast<int>(perm.size());
  auto map_list = [&](const EdgeList& in) {
    EdgeList out;
    for (EdgeId e : in) out.push_back(e >= 0 && e < m ? perm[e] : e);
    return sorted_unique(std::move(out));
  };
  StoredResult out = r;
  out.edges.reset();
  out.abnormal = map_list(r.abnormal);
  if (static_cast<int>(r.coloring.size()) == m) {
    for (int i = 0; i < m; ++i) out.coloring[perm[i]] = r.coloring[i];
  }
  if (r.matchings) {
    for (int i = 0; i < 3; ++i) (*out.matchings)[i] = map_list((*r.matchings)[i]);
  }
  return out;
}

}  // namespace

Json core_to_json(const Core& core) {
  return Json{{"k", core.k},
              {"matchings", core.matchings},
              {"E0", core.E(0)},
              {"E1", core.E(1)},
              {"E2", core.E(2)},
              {"E3", core.E(3)}};
}

Json coloring_to_json(const PartialColoring& psi) {
  return Json(std::vector<Color>(psi.colors().begin(), psi.colors().end()));
}

Json wave_to_json(const Wave& wave, const CoreStructure& s) {
  Json strings = Json::array();
  for (const WaveString& ws : wave.strings) {
    Json circuits = Json::array();
    for (int c : ws.circuits) circuits.push_back(circuit_json(s.circuits[c]));
    Json paths = Json::array();
    for (const PathSeg& p : ws.paths) paths.push_back(path_json(p));
    strings.push_back({{"circuits", circuits}, {"connectors", ws.connectors}, {"paths", paths}});
  }
  Json q = Json::array();
  for (int c : wave.q) q.push_back(circuit_json(s.circuits[c]));
  return Json{{"strings", strings}, {"q", q}, {"notes", wave.notes}};
}

Json stage_to_json(const StageReport& stage) {
  Json charges = Json::array();
  for (const ChargeRecord& c : stage.charges) {
    charges.push_back({{"component", c.component}, {"theta", c.theta}, {"script_e", c.script_e}, {"met", c.met()}});
  }
  Json repairs = Json::array();
  for (const RepairRecord& r : stage.repairs) {
    repairs.push_back({{"component", r.component},
                       {"reason", r.reason},
                       {"theta_before", r.theta_before},
                       {"theta_after", r.theta_after},
                       {"charge_met", r.charge_met}});
  }
  return Json{{"stage", stage.stage},
              {"targets", stage.targets},
              {"theta_before", stage.theta_before},
              {"theta_after", stage.theta_after},
              {"edges_colored", stage.edges_colored},
              {"cases", stage.cases},
              {"charges", charges},
              {"repairs", repairs}};
}

Json verify_to_json(const VerifyReport& v) {
  return Json{{"ok", v.ok()},
              {"proper", v.proper},
              {"total", v.total},
              {"census_identity", v.census_identity},
              {"within_k", v.within_k},
              {"within_fifth", v.within_fifth},
              {"abnormal_list_matches", v.abnormal_list_matches},
              {"abnormal", v.abnormal},
              {"theta", v.theta},
              {"k", v.k},
              {"normal_count", v.normal_count},
              {"failures", v.failures}};
}

Json result_to_json(const std::string& name, const CubicGraph& g, const PncResult& r) {
  Json stages = Json::array();
  for (const StageReport& s : r.stages) stages.push_back(stage_to_json(s));
  Json j{{"graph", name},
         {"n", g.num_vertices()},
         {"m", g.num_edges()},
         {"mu3", {{"value", r.mu3}, {"exact", r.mu3_exact}}},
         {"k", r.core.k},
         {"theta", r.theta_total},
         {"abnormal", r.abnormal_edges},
         {"normal_count", r.normal_count()},
         {"repairs", r.repairs()},
         {"stages", stages},
         {"coloring", coloring_to_json(r.coloring)},
         {"core", core_to_json(r.core)},
         {"edges", edges_json(g)}};
  if (r.wave) j["wave"] = wave_to_json(*r.wave, analyze_core(g, r.core));
  return j;
}

Json oracle_coloring_to_json(const std::string& name, const CubicGraph& g, const PartialColoring& psi) {
  const EdgeList abnormal = abnormal_edges_of(psi);
  return Json{{"graph", name},
              {"n", g.num_vertices()},
              {"m", g.num_edges()},
              {"mu3", nullptr},
              {"k", nullptr},
              {"theta", nullptr},
              {"abnormal", abnormal},
              {"normal_count", g.num_edges() - static_cast<int>(abnormal.size())},
              {"stages", Json::array()},
              {"coloring", coloring_to_json(psi)},
              {"edges", edges_json(g)},
              {"oracle", true}};
}

StoredResult parse_result(const Json& j) {
  if (!j.is_object()) throw ReportError("result is not a JSON object");
  StoredResult r;
  r.graph = field<std::string>(j, "graph");
  r.n = field<int>(j, "n");
  r.m = field<int>(j, "m");
  r.oracle = j.contains("oracle") && field<bool>(j, "oracle");
  if (j.contains("mu3") && !j.at("mu3").is_null()) {
    const Json& mu = j.at("mu3");
    if (!mu.is_object()) throw ReportError("field 'mu3' has the wrong type");
    r.mu3 = field<int>(mu, "value");
    r.mu3_exact = field<bool>(mu, "exact");
  }
  r.k = nullable<int>(j, "k");
  r.theta = nullable<int>(j, "theta");
  r.abnormal = field<EdgeList>(j, "abnormal");
  r.normal_count = field<int>(j, "normal_count");
  r.coloring = field<std::vector<Color>>(j, "coloring");
  if (j.contains("edges")) r.edges = field<std::vector<std::array<int, 2>>>(j, "edges");
  if (j.contains("core") && !j.at("core").is_null()) {
    r.matchings = field<std::array<EdgeList, 3>>(j.at("core"), "matchings");
  }
  if (!r.oracle && !r.matchings) throw ReportError("result has no core");
  return r;
}

VerifyReport verify_stored(const CubicGraph& g, const StoredResult& r) {
  VerifyReport v;
  auto fail = [&](const std::string& why) {
    v.failures.push_back(why);
    return v;
  };
  if (r.n != g.num_vertices() || r.m != g.num_edges()) return fail("result is for a different graph");
  StoredResult local;
  if (r.edges) {
    const auto perm = match_edges(g, *r.edges);
    if (!perm) return fail("edge set differs from the graph");
    local = renumber(r, *perm);
  }
  const StoredResult& rr = r.edges ? local : r;
  if (static_cast<int>(rr.coloring.size()) != g.num_edges()) return fail("coloring has the wrong number of edges");
  for (Color c : rr.coloring) {
    if (c < 0 || c > kNumColors) return fail("color out of range");
  }
  for (EdgeId e : rr.abnormal) {
    if (e < 0 || e >= g.num_edges()) return fail("abnormal edge id out of range");
  }
  const PartialColoring psi(g, rr.coloring);

  if (rr.oracle) {
    v.total = psi.is_total();
    if (!v.total) v.failures.push_back("coloring is not total");
    v.proper = psi.is_proper();
    if (!v.proper) v.failures.push_back("clash at vertex " + std::to_string(psi.find_clash()->first));
    const EdgeList abnormal = abnormal_edges_of(psi);
    v.abnormal = static_cast<int>(abnormal.size());
    v.normal_count = g.num_edges() - v.abnormal;
    v.abnormal_list_matches = abnormal == sorted_unique(rr.abnormal);
    if (!v.abnormal_list_matches) v.failures.push_back("reported abnormal edges differ");
    // No core: the census checks do not apply.
    v.census_identity = v.within_k = true;
  } else {
    PncResult pr;
    pr.coloring = psi;
    pr.abnormal_edges = rr.abnormal;
    pr.mu3_exact = rr.mu3_exact;
    try {
      const auto& ms = *rr.matchings;
      pr.core = core_from_triple(g, ms[0], ms[1], ms[2]);
    } catch (const GraphError& ex) {
      return fail(std::string("core: ") + ex.what());
    }
    v = verify_pnc(g, pr);
    if (rr.k && *rr.k != v.k) v.failures.push_back("reported k differs from the core");
    if (rr.theta && *rr.theta != v.theta) v.failures.push_back("reported theta differs");
    if (rr.mu3 && rr.mu3_exact && *rr.mu3 != v.k) v.failures.push_back("core is not a reported mu3-core");
    if (rr.mu3 && rr.mu3_exact) {
      const Mu3Result mu = compute_mu3(g);
      if (mu.exact && mu.mu3 != *rr.mu3) {
        v.failures.push_back("reported mu3 " + std::to_string(*rr.mu3) + " differs from " + std::to_string(mu.mu3));
      }
    }
  }
  if (rr.normal_count != v.normal_count) v.failures.push_back("reported normal count differs");
  return v;
}

std::string to_dot(const std::string& name, const CubicGraph& g, const PartialColoring& psi,
                   const EdgeList& abnormal) {
  static constexpr std::array<const char*, 6> kPalette{"gray", "red", "blue", "forestgreen", "orange", "purple"};
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  out << "  node [shape=circle, fontsize=10, width=0.3];\n";
  out << "  edge [penwidth=2];\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) out << "  " << v << ";\n";
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const Color c = psi.color(e);
    out << "  " << ed.u << " -- " << ed.v << " [color=" << kPalette[c] << ", label=\"" << c << "\"";
    if (contains(abnormal, e)) out << ", style=\"dashed,bold\", penwidth=3";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string tsv_header() { return "graph\tn\tm\tmu3\texact\tabnormal\tnormal\trepairs\tverified\n"; }

std::string tsv_row(const std::string& name, const CubicGraph& g, const PncResult& r, bool verified) {
  std::ostringstream out;
  out << name << '\t' << g.num_vertices() << '\t' << g.num_edges() << '\t' << r.mu3 << '\t'
      << (r.mu3_exact ? "yes" : "no") << '\t' << r.abnormal_edges.size() << '\t' << r.normal_count() << '\t'
      << r.repairs() << '\t' << (verified ? "ok" : "FAIL") << '\n';
  return out.str();
}

}  // namespace pnc
