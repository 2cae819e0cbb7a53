#pragma once

// Test-side oracles and fixtures. Everything here is deliberately naive and
// independent of the library algorithms it is used to check.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pnc/coloring.hpp"
#include "pnc/core.hpp"
#include "pnc/graph.hpp"

namespace pnc::support {

// Graphs of data/cubic_n<n>.g6.
std::vector<CubicGraph> corpus(int n);
// Corpus graphs that are connected and bridgeless.
std::vector<CubicGraph> bridgeless_corpus(int n);
std::string read_file(const std::string& path);

// Pairing-model random cubic graph, rejected until connected and bridgeless.
// With `simple` false parallel edges are allowed (never loops).
std::optional<CubicGraph> random_cubic(int n, std::mt19937& rng, bool simple = true);

// Perfect matchings by include/exclude over edge ids.
std::vector<EdgeList> naive_matchings(const CubicGraph& g);

// min |E0| over all triples (with repetition) of naive_matchings.
int naive_mu3(const CubicGraph& g);

// Number of edges of G lying in none of m1, m2, m3.
int uncovered(const CubicGraph& g, const EdgeList& m1, const EdgeList& m2, const EdgeList& m3);

// Core from three uniformly chosen matchings.
Core random_core(const CubicGraph& g, const std::vector<EdgeList>& matchings, std::mt19937& rng);

// Random full proper 5-edge-coloring: random edge order, random admissible
// color (an edge has at most four neighbours, so this never gets stuck).
PartialColoring random_total_coloring(const CubicGraph& g, std::mt19937& rng);

// Status straight from the definition: distinct colors on e and its
// neighbours, counted over edge ids.
bool naive_normal(const PartialColoring& psi, EdgeId e);
int naive_abnormal_count(const PartialColoring& psi);

// Plain backtracking 3-edge-colorability.
bool naive_three_colorable(const CubicGraph& g);

// Relabels vertices by `perm` and lists edges in reversed order.
CubicGraph relabel(const CubicGraph& g, const std::vector<VertexId>& perm);

}  // namespace pnc::support
