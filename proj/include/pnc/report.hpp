#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pnc/coloring.hpp"
#include "pnc/core.hpp"
#include "pnc/oracles.hpp"
#include "pnc/pipeline.hpp"
#include "pnc/wave.hpp"

namespace pnc {

using Json = nlohmann::ordered_json;

class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json core_to_json(const Core& core);
// Colors by edge id, 0 for uncolored.
Json coloring_to_json(const PartialColoring& psi);
Json wave_to_json(const Wave& wave, const CoreStructure& s);
Json stage_to_json(const StageReport& stage);
Json verify_to_json(const VerifyReport& v);

// {graph, n, m, mu3:{value,exact}, k, theta, abnormal, normal_count, stages,
// coloring, core, edges}.
Json result_to_json(const std::string& name, const CubicGraph& g, const PncResult& r);
// Same schema for an oracle coloring; mu3, k and theta are null and
// "oracle" is true.
Json oracle_coloring_to_json(const std::string& name, const CubicGraph& g, const PartialColoring& psi);

// A result read back from JSON. Oracle results carry no core.
struct StoredResult {
  std::string graph;
  int n = 0;
  int m = 0;
  bool oracle = false;
  std::optional<int> mu3;
  bool mu3_exact = false;
  std::optional<int> k;
  std::optional<int> theta;
  EdgeList abnormal;
  int normal_count = 0;
  std::vector<Color> coloring;
  std::optional<std::vector<std::array<int, 2>>> edges;
  std::optional<std::array<EdgeList, 3>> matchings;
};

// Throws ReportError on missing or ill-typed fields.
StoredResult parse_result(const Json& j);

// Re-checks a stored result against its graph from scratch.
VerifyReport verify_stored(const CubicGraph& g, const StoredResult& r);

// Graphviz source; colors 1..5 use a fixed palette and abnormal edges are
// dashed and bold.
std::string to_dot(const std::string& name, const CubicGraph& g, const PartialColoring& psi,
                   const EdgeList& abnormal);

std::string tsv_header();
std::string tsv_row(const std::string& name, const CubicGraph& g, const PncResult& r, bool verified);

}  // namespace pnc
