#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pnc/core.hpp"
#include "pnc/graph.hpp"

namespace pnc {

// Colors are 1..5; 0 marks an uncolored edge.
using Color = int;
inline constexpr Color kUncolored = 0;
inline constexpr int kNumColors = 5;

// Bit c set for color c (bit 0 unused).
using ColorMask = unsigned;
inline constexpr ColorMask color_bit(Color c) { return 1u << c; }
inline constexpr ColorMask kLowColors = color_bit(1) | color_bit(2) | color_bit(3);
inline constexpr ColorMask kHighColors = color_bit(4) | color_bit(5);

class ColoringConflict : public std::runtime_error {
 public:
  ColoringConflict(EdgeId edge, VertexId vertex, EdgeId clash);
  EdgeId edge;
  VertexId vertex;
  EdgeId clash;
};

// Proper partial edge-coloring. Holds a pointer to its graph, which must
// outlive it; copies are cheap and independent.
class PartialColoring {
 public:
  PartialColoring() = default;
  explicit PartialColoring(const CubicGraph& g);
  PartialColoring(const CubicGraph& g, std::vector<Color> colors);

  const CubicGraph& graph() const { return *g_; }
  Color color(EdgeId e) const { return colors_[e]; }
  bool colored(EdgeId e) const { return colors_[e] != kUncolored; }
  std::span<const Color> colors() const { return colors_; }

  // Colors on the edges at v, optionally ignoring one edge.
  ColorMask palette(VertexId v, EdgeId except = -1) const;
  // Colors that e cannot take without breaking properness.
  ColorMask blocked(EdgeId e) const;

  // Throws ColoringConflict if an incident edge already has color c.
  void set(EdgeId e, Color c);
  bool try_set(EdgeId e, Color c);
  void unset(EdgeId e) { colors_[e] = kUncolored; }
  // Writes c without any check; used when recoloring several edges at once.
  void assign_unchecked(EdgeId e, Color c) { colors_[e] = c; }

  bool is_total() const;
  // First vertex with two equally colored edges, if any.
  std::optional<std::pair<VertexId, EdgeId>> find_clash() const;
  bool is_proper() const { return !find_clash().has_value(); }
  int colored_count() const;

  bool operator==(const PartialColoring& o) const { return colors_ == o.colors_; }

 private:
  const CubicGraph* g_ = nullptr;
  std::vector<Color> colors_;
};

enum class EdgeStatus { Poor, Rich, Abnormal, Undetermined };

const char* to_string(EdgeStatus s);

// Counts colors over e and its adjacent edges (as a set of edge ids).
EdgeStatus edge_status(const PartialColoring& psi, EdgeId e);
inline bool is_normal(EdgeStatus s) { return s == EdgeStatus::Poor || s == EdgeStatus::Rich; }

// e and all edges adjacent to it are colored.
bool is_inner(const PartialColoring& psi, EdgeId e);

// Per-edge charge in {-1, 0, 1} relative to a core.
int theta(const Core& core, const PartialColoring& psi, EdgeId e);
int theta_sum(const Core& core, const PartialColoring& psi, const EdgeList& edges);
int theta_total(const Core& core, const PartialColoring& psi);

struct ThetaLedger {
  std::vector<int> theta_of;
  int total(const EdgeList& edges) const;
  int total() const;
};

ThetaLedger make_theta_ledger(const Core& core, const PartialColoring& psi);

// Colors each E1 edge with the index (1..3) of its unique matching.
PartialColoring major_coloring(const CubicGraph& g, const Core& core);

// An edge h at v is good on v if the colors at v are exactly {1,2,3}, or the
// other two edges at v carry exactly {4,5} while h is uncolored or low.
// Throws GraphError if v is not an endpoint of h.
bool is_psi_good(const PartialColoring& psi, EdgeId h, VertexId v);

// Edges outside `h_edges` with an end on the subgraph that are not good on
// that end.
EdgeList script_e(const PartialColoring& psi, const EdgeList& h_edges);

// ---------------------------------------------------------------------------
// {1,2,3}-extension

// Edge sets of an extension problem: `body` must be uncolored, colored
// `rim` edges must be low, and every uncolored edge of body u rim receives a
// color in {1,2,3}.
struct Region {
  EdgeList body;
  EdgeList rim;
};

Region region_of(const CubicGraph& g, std::span<const Circuit> circuits, std::span<const PathSeg> paths);
Region region_of(const CubicGraph& g, const Circuit& c);
Region region_of(const CubicGraph& g, const PathSeg& p);
// Connected subgraph given by its edges; rim = edges outside it touching it.
Region region_of_subgraph(const CubicGraph& g, const EdgeList& edges);

enum class ExtendStatus { Extended, NotExtendable };

struct ExtendOutcome {
  ExtendStatus status = ExtendStatus::NotExtendable;
  // "precondition", "infeasible" or "requirement" when not extended.
  std::string reason;
  std::vector<std::pair<EdgeId, Color>> assignment;
  // Whether some assignment exists, ignoring the requirement.
  bool plain_extendable = false;
  long long solutions_tried = 0;

  bool ok() const { return status == ExtendStatus::Extended; }
};

using Requirement = std::function<bool(const PartialColoring&)>;

// Exhaustive search; each body edge is followed by the rim edges touching it,
// values 1 < 2 < 3. With a requirement, solutions are enumerated (up to
// `max_solutions`) until one satisfies it.
ExtendOutcome extend_123(const PartialColoring& psi, const Region& region, const Requirement& require = {},
                         long long max_solutions = 1'000'000);

// Applies a successful outcome to psi.
void apply(PartialColoring& psi, const ExtendOutcome& outcome);

bool is_extendable(const PartialColoring& psi, const Region& region);

// True iff the unique E3 edges of <C1> and <C2> are both adjacent to a common
// colored edge whose color is 4 or 5. Throws GraphError if some circuit does
// not have exactly one E3 edge in its boundary.
bool psi_connected(const Core& core, const PartialColoring& psi, const Circuit& c1, const Circuit& c2);

// Exact backtracking 3-edge-coloring (colors 1..3), if one exists.
std::optional<PartialColoring> find_three_edge_coloring(const CubicGraph& g);

}  // namespace pnc
