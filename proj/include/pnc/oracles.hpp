#pragma once

#include <optional>
#include <vector>

#include "pnc/coloring.hpp"
#include "pnc/graph.hpp"

namespace pnc {

// Exhaustive searches used as ground truth. Budgets count search nodes.

inline constexpr long long kDefaultOracleBudget = 50'000'000;

enum class OracleStatus { Found, NotFound, BudgetExceeded };
const char* to_string(OracleStatus s);

struct NormalSearch {
  OracleStatus status = OracleStatus::NotFound;
  std::optional<PartialColoring> coloring;
  long long nodes = 0;
};

// Proper 5-edge-coloring with every edge normal. Edges are colored in BFS
// order; the edges at vertex 0 get 1,2,3 and 4 is used before 5.
NormalSearch brute_force_normal(const CubicGraph& g, long long budget = kDefaultOracleBudget);

struct MaxNormalResult {
  // Found when the search completed; `count` is then the exact maximum.
  OracleStatus status = OracleStatus::NotFound;
  int count = 0;
  std::optional<PartialColoring> witness;
  long long nodes = 0;
};

// Maximum number of normal edges over all proper 5-edge-colorings.
MaxNormalResult max_normal_brute(const CubicGraph& g, long long budget = kDefaultOracleBudget);

// Edge map into petersen_graph(): the three edges at each vertex of G go to
// the three edges at some vertex of the Petersen graph.
struct HMapping {
  std::vector<EdgeId> edge_map;
};

const CubicGraph& petersen_graph();
bool is_petersen_coloring(const CubicGraph& g, const HMapping& h);

struct PetersenSearch {
  OracleStatus status = OracleStatus::NotFound;
  std::optional<HMapping> mapping;
  long long nodes = 0;
};

PetersenSearch petersen_coloring(const CubicGraph& g, long long budget = kDefaultOracleBudget);

// Pulls a normal coloring of the Petersen graph back along h.
PartialColoring normal_coloring_from(const CubicGraph& g, const HMapping& h);

}  // namespace pnc
