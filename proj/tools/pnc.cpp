// pnc: cores, mu3 and partially normal 5-edge-colorings of cubic graphs.

#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "pnc/core.hpp"
#include "pnc/graph.hpp"
#include "pnc/oracles.hpp"
#include "pnc/pipeline.hpp"
#include "pnc/report.hpp"

using namespace pnc;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2 };

struct RunConfig {
  std::vector<std::string> inputs;
  std::string gen;
  int param = 0;
  std::string format = "auto";
  std::string out;
  std::string summary;
  long long budget_mu3 = kDefaultMu3Budget;
  long long budget_oracle = kDefaultOracleBudget;
  bool no_repair = false;
  int jobs = 1;
  // oracle
  std::string oracle_kind;
  // verify
  std::string graph_path;
  std::string result_path;
};

struct NamedGraph {
  std::string name;
  CubicGraph g;
};

// Output of one graph, emitted in input order once all workers finish.
struct Item {
  std::string status;   // always on stdout
  std::string text;     // per-graph output, stdout or --out path
  std::string tsv;      // summary row
  std::string error;    // stderr diagnostics
  int exit = kOk;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_edgelist(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    return line.find_first_of(" \t#") != std::string::npos;
  }
  return false;
}

std::vector<NamedGraph> load_graphs(const RunConfig& cfg) {
  std::vector<NamedGraph> out;
  if (!cfg.gen.empty()) {
    const Family f = family_from_name(cfg.gen);
    const bool takes_param = f == Family::Prism || f == Family::Flower;
    const std::string name = takes_param ? cfg.gen + "(" + std::to_string(cfg.param) + ")" : cfg.gen;
    out.push_back({name, generate_graph(f, cfg.param)});
    return out;
  }
  for (const std::string& path : cfg.inputs) {
    const std::string text = read_all(path);
    bool edgelist = cfg.format == "edgelist";
    if (cfg.format == "auto") edgelist = looks_like_edgelist(text);
    if (edgelist) {
      out.push_back({path, parse_edgelist(text)});
      continue;
    }
    std::vector<CubicGraph> gs = parse_graph6_lines(text);
    for (std::size_t i = 0; i < gs.size(); ++i) out.push_back({path + ":" + std::to_string(i + 1), std::move(gs[i])});
  }
  return out;
}

// Runs `work` over all graphs on `jobs` threads, keeping input order.
std::vector<Item> run_all(const std::vector<NamedGraph>& graphs, int jobs,
                          const std::function<Item(const NamedGraph&)>& work) {
  std::vector<Item> items(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < graphs.size();) {
      try {
        items[i] = work(graphs[i]);
      } catch (const GraphError& ex) {
        items[i].error = graphs[i].name + ": " + ex.what();
        items[i].exit = kInputError;
      } catch (const std::exception& ex) {
        items[i].error = graphs[i].name + ": " + ex.what();
        items[i].exit = kVerifyFailed;
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(graphs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return items;
}

// --out is a format (json, dot) written to stdout, or a path whose extension
// picks the format.
struct OutSpec {
  std::string format;
  std::string path;
};

OutSpec parse_out(const std::string& out) {
  if (out.empty() || out == "json" || out == "dot") return {out, ""};
  const auto dot = out.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : out.substr(dot + 1);
  if (ext == "json" || ext == "jsonl") return {"json", out};
  if (ext == "dot" || ext == "gv") return {"dot", out};
  throw CLI::ValidationError("--out", "expected json, dot, or a .json/.dot path");
}

int emit(const RunConfig& cfg, const std::vector<Item>& items, bool tsv) {
  const OutSpec spec = parse_out(cfg.out);
  std::ofstream file;
  if (!spec.path.empty()) {
    file.open(spec.path, std::ios::binary);
    if (!file) {
      std::cerr << "cannot write '" << spec.path << "'\n";
      return kInputError;
    }
  }
  std::ostream& out = spec.path.empty() ? std::cout : file;
  int code = kOk;
  for (const Item& it : items) {
    std::cout << it.status;
    out << it.text;
    if (!it.error.empty()) std::cerr << it.error << '\n';
    if (it.exit == kVerifyFailed) code = kVerifyFailed;
    if (it.exit == kInputError && code == kOk) code = kInputError;
  }
  if (tsv) {
    std::cout << tsv_header();
    for (const Item& it : items) std::cout << it.tsv;
  }
  return code;
}

std::string json_line(const Json& j) { return j.dump() + "\n"; }

int cmd_color(const RunConfig& cfg) {
  const auto graphs = load_graphs(cfg);
  const OutSpec spec = parse_out(cfg.out);
  const bool tsv = cfg.summary == "tsv";
  PncOptions opt;
  opt.repair = !cfg.no_repair;
  opt.mu3_budget = cfg.budget_mu3;
  auto items = run_all(graphs, cfg.jobs, [&](const NamedGraph& ng) {
    Item it;
    PncResult r;
    try {
      r = color_partially_normal(ng.g, opt);
    } catch (const PncError& ex) {
      it.error = ng.name + ": " + ex.what();
      it.exit = kVerifyFailed;
      it.tsv = ng.name + "\t" + std::to_string(ng.g.num_vertices()) + "\t" + std::to_string(ng.g.num_edges()) +
               "\t-\t-\t-\t-\t-\tFAIL\n";
      return it;
    }
    const VerifyReport v = verify_pnc(ng.g, r);
    if (!v.ok()) {
      it.exit = kVerifyFailed;
      for (const std::string& f : v.failures) it.error += ng.name + ": " + f + "\n";
      it.error.pop_back();
    }
    if (spec.format == "json") {
      Json j = result_to_json(ng.name, ng.g, r);
      j["verify"] = verify_to_json(v);
      it.text = json_line(j);
    } else if (spec.format == "dot") {
      it.text = to_dot(ng.name, ng.g, r.coloring, r.abnormal_edges);
    } else if (!tsv) {
      std::ostringstream s;
      s << ng.name << ": mu3=" << r.mu3 << (r.mu3_exact ? " (exact)" : " (bound)")
        << " abnormal=" << r.abnormal_edges.size() << " normal=" << r.normal_count() << " repairs=" << r.repairs()
        << (v.ok() ? " ok" : " FAIL") << '\n';
      it.text = s.str();
    }
    it.tsv = tsv_row(ng.name, ng.g, r, v.ok());
    return it;
  });
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].exit == kInputError && items[i].tsv.empty()) {
      const CubicGraph& g = graphs[i].g;
      items[i].tsv = graphs[i].name + "\t" + std::to_string(g.num_vertices()) + "\t" + std::to_string(g.num_edges()) +
                     "\t-\t-\t-\t-\t-\tinvalid\n";
    }
  }
  return emit(cfg, items, tsv);
}

int cmd_mu3(const RunConfig& cfg) {
  const auto graphs = load_graphs(cfg);
  const OutSpec spec = parse_out(cfg.out);
  const bool single = graphs.size() == 1;
  auto items = run_all(graphs, cfg.jobs, [&](const NamedGraph& ng) {
    Item it;
    const Mu3Result r = compute_mu3(ng.g, cfg.budget_mu3);
    if (spec.format == "json") {
      it.text = json_line(Json{{"graph", ng.name},
                               {"n", ng.g.num_vertices()},
                               {"m", ng.g.num_edges()},
                               {"mu3", {{"value", r.mu3}, {"exact", r.exact}}},
                               {"matchings", r.matchings},
                               {"triples_examined", r.triples_examined},
                               {"core", core_to_json(r.witness)}});
    } else {
      it.text = (single ? "" : ng.name + ": ") + std::to_string(r.mu3) + (r.exact ? " (exact)" : " (upper bound)") + "\n";
    }
    return it;
  });
  return emit(cfg, items, false);
}

int cmd_oracle(const RunConfig& cfg) {
  const auto graphs = load_graphs(cfg);
  const OutSpec spec = parse_out(cfg.out);
  const bool single = graphs.size() == 1;
  auto items = run_all(graphs, cfg.jobs, [&](const NamedGraph& ng) {
    Item it;
    const std::string prefix = single ? "" : ng.name + ": ";
    std::optional<PartialColoring> witness;
    std::optional<HMapping> mapping;
    std::string line;
    if (cfg.oracle_kind == "normal") {
      NormalSearch r = brute_force_normal(ng.g, cfg.budget_oracle);
      line = to_string(r.status);
      witness = std::move(r.coloring);
      if (witness && !abnormal_edges_of(*witness).empty()) it.exit = kVerifyFailed;
    } else if (cfg.oracle_kind == "petersen") {
      PetersenSearch r = petersen_coloring(ng.g, cfg.budget_oracle);
      line = to_string(r.status);
      if (r.mapping) {
        if (!is_petersen_coloring(ng.g, *r.mapping)) it.exit = kVerifyFailed;
        witness = normal_coloring_from(ng.g, *r.mapping);
        mapping = std::move(r.mapping);
      }
    } else {
      MaxNormalResult r = max_normal_brute(ng.g, cfg.budget_oracle);
      line = std::to_string(r.count) + (r.status == OracleStatus::Found ? " (exact)" : " (lower bound)");
      witness = std::move(r.witness);
    }
    if (witness && !witness->is_proper()) it.exit = kVerifyFailed;
    if (it.exit == kVerifyFailed) it.error = ng.name + ": oracle witness failed its own check";
    if (spec.format == "json" && witness) {
      Json j = oracle_coloring_to_json(ng.name, ng.g, *witness);
      if (mapping) j["petersen_map"] = mapping->edge_map;
      it.text = json_line(j);
    } else if (spec.format == "dot" && witness) {
      it.text = to_dot(ng.name, ng.g, *witness, abnormal_edges_of(*witness));
    }
    it.status = prefix + line + "\n";
    return it;
  });
  return emit(cfg, items, false);
}

int cmd_verify(const RunConfig& cfg) {
  CubicGraph g;
  StoredResult stored;
  try {
    const std::string text = read_all(cfg.graph_path);
    bool edgelist = cfg.format == "edgelist" || (cfg.format == "auto" && looks_like_edgelist(text));
    if (edgelist) {
      g = parse_edgelist(text);
    } else {
      const auto gs = parse_graph6_lines(text);
      if (gs.size() != 1) throw GraphError("expected exactly one graph in '" + cfg.graph_path + "'");
      g = gs.front();
    }
    stored = parse_result(Json::parse(read_all(cfg.result_path)));
  } catch (const GraphError& ex) {
    std::cerr << ex.what() << '\n';
    return kInputError;
  } catch (const ReportError& ex) {
    std::cerr << "result: " << ex.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& ex) {
    std::cerr << "result: " << ex.what() << '\n';
    return kInputError;
  }
  const VerifyReport v = verify_stored(g, stored);
  std::cout << verify_to_json(v).dump() << '\n';
  return v.ok() ? kOk : kVerifyFailed;
}

int cmd_gen(const RunConfig& cfg) {
  const auto graphs = load_graphs(cfg);
  for (const NamedGraph& ng : graphs) {
    std::cout << (cfg.format == "edgelist" ? to_edgelist(ng.g) : to_graph6(ng.g) + "\n");
  }
  return kOk;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool repair_flag) {
  auto* in = sub->add_option("-i,--input", cfg.inputs, "Graph files (graph6 lines or an edge list; - for stdin)");
  auto* gen = sub->add_option("--gen", cfg.gen, "Standard family: petersen, k4, k33, prism, flower, moebius_kantor");
  in->excludes(gen);
  sub->add_option("--param", cfg.param, "Family parameter (prism size, flower order)");
  sub->add_option("--format", cfg.format, "Input format")->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
  sub->add_option("--out", cfg.out, "json, dot, or an output path (.json/.dot)");
  sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  if (repair_flag) {
    sub->add_option("--summary", cfg.summary, "Summary table")->check(CLI::IsMember({"tsv"}));
    sub->add_option("--budget-mu3", cfg.budget_mu3, "Triples examined by the mu3 search")->check(CLI::PositiveNumber);
    sub->add_flag("--no-repair", cfg.no_repair, "Fail instead of running the local-search fallback");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cores, mu3 and partially normal 5-edge-colorings of cubic graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* color = app.add_subcommand("color", "Color each graph and verify the result");
  add_common(color, cfg, true);

  auto* mu3 = app.add_subcommand("mu3", "Compute mu3 and a witness core");
  add_common(mu3, cfg, false);
  mu3->add_option("--budget-mu3", cfg.budget_mu3, "Triples examined")->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive searches: normal, petersen, maxnormal");
  oracle->add_option("kind", cfg.oracle_kind, "Search to run")
      ->required()
      ->check(CLI::IsMember({"normal", "petersen", "maxnormal"}));
  add_common(oracle, cfg, false);
  oracle->add_option("--budget-oracle", cfg.budget_oracle, "Search nodes")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Re-check a stored result against its graph");
  verify->add_option("-g,--graph", cfg.graph_path, "Graph file")->required();
  verify->add_option("-r,--result", cfg.result_path, "Result JSON")->required();
  verify->add_option("--format", cfg.format, "Graph format")->check(CLI::IsMember({"auto", "graph6", "edgelist"}));

  auto* gen = app.add_subcommand("gen", "Print a standard graph");
  gen->add_option("--gen", cfg.gen, "Family")->required();
  gen->add_option("--param", cfg.param, "Family parameter");
  gen->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"auto", "graph6", "edgelist"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  for (CLI::App* sub : {color, mu3, oracle}) {
    if (sub->parsed() && cfg.inputs.empty() && cfg.gen.empty()) {
      std::cerr << "one of --input or --gen is required\n";
      return kInputError;
    }
  }
  try {
    if (color->parsed()) return cmd_color(cfg);
    if (mu3->parsed()) return cmd_mu3(cfg);
    if (oracle->parsed()) return cmd_oracle(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (gen->parsed()) return cmd_gen(cfg);
  } catch (const GraphError& ex) {
    std::cerr << ex.what() << '\n';
    return kInputError;
  } catch (const CLI::ValidationError& ex) {
    std::cerr << ex.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
