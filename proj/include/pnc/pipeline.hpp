#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pnc/coloring.hpp"
#include "pnc/core.hpp"
#include "pnc/wave.hpp"

namespace pnc {

struct PncOptions {
  bool repair = true;
  long long mu3_budget = kDefaultMu3Budget;
  // Run the staged construction on this core instead of a mu3-core.
  std::optional<Core> core;
  // Run the staged construction even when a 3-edge-coloring exists.
  bool skip_three_coloring = false;
  long long repair_node_budget = 2'000'000;
};

struct RepairRecord {
  std::string component;
  std::string reason;
  int theta_before = 0;
  int theta_after = 0;
  bool charge_met = false;
};

struct ChargeRecord {
  std::string component;
  int theta = 0;
  int script_e = 0;
  bool met() const { return theta >= script_e; }
};

struct StageReport {
  std::string stage;
  int targets = 0;
  int theta_before = 0;
  int theta_after = 0;
  int edges_colored = 0;
  std::vector<std::string> cases;
  std::vector<ChargeRecord> charges;
  std::vector<RepairRecord> repairs;
};

// A charged subgraph of the construction.
struct KComponent {
  std::string label;
  EdgeList edges;
};

struct PncResult {
  PartialColoring coloring;
  Core core;
  int mu3 = 0;
  bool mu3_exact = false;
  EdgeList abnormal_edges;
  int theta_total = 0;
  std::vector<StageReport> stages;
  std::vector<KComponent> k_components;
  std::optional<Wave> wave;

  int repairs() const;
  int normal_count() const { return coloring.graph().num_edges() - static_cast<int>(abnormal_edges.size()); }
};

class PncError : public std::runtime_error {
 public:
  PncError(const std::string& what, std::vector<StageReport> stages)
      : std::runtime_error(what), stages(std::move(stages)) {}
  std::vector<StageReport> stages;
};

// Full proper 5-edge-coloring with at most k abnormal edges, k = |E0| of the
// core used (mu3(G) unless a core is supplied). Throws GraphError for
// non-bridgeless or disconnected input and PncError when a stage fails with
// repair disabled.
PncResult color_partially_normal(const CubicGraph& g, const PncOptions& options = {});

struct VerifyReport {
  bool proper = false;
  bool total = false;
  bool census_identity = false;  // abnormal = k - theta(G)
  bool within_k = false;
  bool within_fifth = true;      // abnormal <= |E|/5, checked when mu3 is exact
  bool abnormal_list_matches = false;
  int abnormal = 0;
  int theta = 0;
  int k = 0;
  int normal_count = 0;
  int normal_target = 0;  // |E| - k
  std::vector<std::string> failures;

  bool ok() const {
    return proper && total && census_identity && within_k && within_fifth && abnormal_list_matches && failures.empty();
  }
};

// Recomputes everything from the graph, the core and the coloring.
VerifyReport verify_pnc(const CubicGraph& g, const PncResult& result);

// Edge statuses of a total coloring.
EdgeList abnormal_edges_of(const PartialColoring& psi);

// ---------------------------------------------------------------------------
// Local search

struct RepairOutcome {
  bool changed = false;
  bool charge_met_before = false;
  bool charge_met_after = false;
  int value_before = 0;  // theta over the affected edges
  int value_after = 0;
  long long nodes = 0;
  bool exhausted = false;
};

// Recolors `free_edges` over {1..5} to maximize theta over every edge whose
// closed neighborhood meets them, keeping the coloring proper. Leaves psi
// alone when the component already meets its charge (theta >= |script E|)
// with every free edge colored; otherwise the current colors are kept unless
// strictly improved.
RepairOutcome repair_fallback(const Core& core, PartialColoring& psi, const EdgeList& component,
                              const EdgeList& free_edges, long long node_budget = 2'000'000);

// First assignment of `vars` (in order, colors ascending within `allowed`)
// that keeps psi proper and satisfies `accept`, if any.
std::optional<std::vector<std::pair<EdgeId, Color>>> first_local_assignment(
    const PartialColoring& psi, const std::vector<EdgeId>& vars, ColorMask allowed,
    const std::function<bool(const PartialColoring&)>& accept, long long node_budget = 5'000'000);

// Colors of the circuit edges u1u2, ..., u7u1 and of the E3 edge f at u1 for a
// 7-circuit with sigma = 1 whose boundary colors at u2..u7 are 1,1,2,2,3,3.
struct SevenCircuitTemplate {
  std::array<Color, 7> circuit;
  Color f;
};
const SevenCircuitTemplate& seven_circuit_template();

}  // namespace pnc
