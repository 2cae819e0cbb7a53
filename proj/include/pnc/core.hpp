#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "pnc/graph.hpp"

namespace pnc {

// Three 1-factors and the partition of E(G) by how many of them contain each
// edge. The core subgraph is induced by E0 u E2 u E3; k = |E0|.
struct Core {
  std::array<EdgeList, 3> matchings;
  std::vector<std::uint8_t> class_of;
  std::array<EdgeList, 4> classes;
  int k = 0;

  const EdgeList& E(int i) const { return classes[i]; }
  // E0 u E2, the edges that form disjoint circuits.
  EdgeList circuit_edges() const { return set_union(classes[0], classes[2]); }
};

bool is_perfect_matching(const CubicGraph& g, const EdgeList& edges);

// Backtracking from the lowest uncovered vertex; stops after `limit` matchings
// or when `visit` returns false.
void for_each_perfect_matching(const CubicGraph& g, long long limit,
                               const std::function<bool(const EdgeList&)>& visit);
std::vector<EdgeList> enumerate_perfect_matchings(const CubicGraph& g, long long limit = 1'000'000);

// Throws GraphError if some argument is not a perfect matching. The remaining
// core invariants always hold and are checked with std::logic_error.
Core core_from_triple(const CubicGraph& g, const EdgeList& m1, const EdgeList& m2, const EdgeList& m3);

struct Mu3Result {
  int mu3 = 0;
  Core witness;
  bool exact = false;
  long long triples_examined = 0;
  long long matchings = 0;
  // Triples attaining mu3 that were seen while picking the witness.
  long long tied_triples = 0;
};

inline constexpr long long kDefaultMu3Budget = 10'000'000;

// Minimum |E0| over all triples (repetition allowed) of perfect matchings.
// Among minimizers the witness has the fewest odd circuits in G[E0 u E2],
// then the lexicographically smallest E0. Throws GraphError without a perfect
// matching and std::logic_error if an exact mu3 of a bridgeless graph
// exceeds |E|/5.
Mu3Result compute_mu3(const CubicGraph& g, long long budget = kDefaultMu3Budget);

// Circuits of G[E0 u E2] with the per-vertex lookups later stages need.
struct CoreStructure {
  std::vector<Circuit> circuits;
  std::vector<int> circuit_of_vertex;  // -1 off the circuits
  std::vector<EdgeId> e3_at;           // E3 edge at a vertex, or -1
  std::vector<int> sigma;              // per circuit

  int circuit_index(const Circuit& c) const;
};

CoreStructure analyze_core(const CubicGraph& g, const Core& core);

int count_odd_circuits(const CubicGraph& g, const Core& core);

// Number of vertices of C incident with an E3 edge. Throws GraphError if C is
// not a circuit of G[E0 u E2].
int sigma(const CubicGraph& g, const Core& core, const Circuit& c);

// Circuits of G[E0 u E2] with sigma = 1 and length at most 5.
std::vector<Circuit> omega(const CubicGraph& g, const Core& core);

// True iff some E1 edge joins the two circuits. Both must lie in omega().
bool gc_connected(const CubicGraph& g, const Core& core, const Circuit& c1, const Circuit& c2);

}  // namespace pnc
