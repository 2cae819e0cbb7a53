#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pnc/coloring.hpp"
#include "pnc/core.hpp"

namespace pnc {

// C_0 e_1 C_1 ... e_t C_t: distinct odd circuits of G[E0 u E2] chained by E3
// edges. Circuits are indices into CoreStructure::circuits; connector e_i
// joins u[i-1] on C_{i-1} to v[i-1] on C_i.
struct StringOfCore {
  std::vector<int> circuits;
  EdgeList connectors;
  std::vector<VertexId> u;
  std::vector<VertexId> v;

  int t() const { return static_cast<int>(connectors.size()); }
};

struct WaveString : StringOfCore {
  // paths[j] lies on circuits[j]; end paths have u[0] resp. v[t-1] as an end,
  // middle paths join v[j-1] and u[j].
  std::vector<PathSeg> paths;
  // Whether the second side's paths were still extendable after the first
  // side had been colored (recorded, not required).
  bool second_side_extendable = true;
};

struct Wave {
  std::vector<WaveString> strings;
  // Odd circuits of G[E0 u E2] outside every string.
  std::vector<int> q;
  // Construction-time invariant breaches (empty when the build is clean).
  std::vector<std::string> notes;

  std::vector<PathSeg> all_paths() const;
  std::vector<int> circuits() const;
  // Edges of the strings: circuit edges and connectors.
  EdgeList edges(const CoreStructure& s) const;
};

// Greedy maximal family of pairwise disjoint strings, longest chain first.
std::vector<StringOfCore> find_strings(const CubicGraph& g, const Core& core, const CoreStructure& s);

// Grows strings from E3 connectors: at each circuit the shortest extendable
// path from the entry vertex to a vertex with an E3 edge into an unused odd
// circuit is taken; when none exists the longest extendable path anchored at
// the entry vertex closes that side. Returns nullopt when the core has no
// string. `phi_m` is the major-coloring of the core.
std::optional<Wave> build_wave(const CubicGraph& g, const Core& core, const CoreStructure& s,
                               const PartialColoring& phi_m);

struct WaveReport {
  bool structure_ok = true;
  bool item1 = true;  // the path family is extendable
  bool item2 = true;  // end paths cannot be lengthened
  bool item3 = true;  // Q components share no E3 boundary edge with others
  std::vector<std::string> violations;

  bool ok() const { return structure_ok && item1 && item2 && item3; }
};

WaveReport verify_wave(const CubicGraph& g, const Core& core, const CoreStructure& s, const PartialColoring& phi_m,
                       const Wave& wave);

}  // namespace pnc
