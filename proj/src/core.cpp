#include "pnc/core.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace pnc {

bool is_perfect_matching(const CubicGraph& g, const EdgeList& edges) {
  std::vector<char> covered(g.num_vertices(), 0);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.num_edges()) return false;
    for (VertexId w : {g.edge(e).u, g.edge(e).v}) {
      if (covered[w]) return false;
      covered[w] = 1;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

void for_each_perfect_matching(const CubicGraph& g, long long limit,
                               const std::function<bool(const EdgeList&)>& visit) {
  const int n = g.num_vertices();
  std::vector<char> covered(n, 0);
  EdgeList chosen;
  long long emitted = 0;
  bool stop = false;

  auto isolated = [&](VertexId x) {
    if (covered[x]) return false;
    for (EdgeId e : g.incident(x)) {
      if (!covered[g.other_end(e, x)]) return false;
    }
    return true;
  };

  // Branches on the lowest uncovered vertex; a neighbor left without a free
  // partner ends the branch early.
  std::function<void(VertexId)> rec = [&](VertexId from) {
    VertexId v = from;
    while (v < n && covered[v]) ++v;
    if (v == n) {
      EdgeList sorted = sorted_unique(chosen);
      ++emitted;
      if (!visit(sorted) || emitted >= limit) stop = true;
      return;
    }
    covered[v] = 1;
    for (EdgeId e : g.incident(v)) {
      const VertexId w = g.other_end(e, v);
      if (covered[w]) continue;
      // Parallel edges give distinct matchings.
      covered[w] = 1;
      chosen.push_back(e);
      bool dead = false;
      for (VertexId c : {v, w}) {
        for (EdgeId f : g.incident(c)) dead = dead || isolated(g.other_end(f, c));
      }
      if (!dead) rec(v + 1);
      chosen.pop_back();
      covered[w] = 0;
      if (stop) break;
    }
    covered[v] = 0;
  };
  if (limit > 0) rec(0);
}

std::vector<EdgeList> enumerate_perfect_matchings(const CubicGraph& g, long long limit) {
  std::vector<EdgeList> out;
  for_each_perfect_matching(g, limit, [&](const EdgeList& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

Core core_from_triple(const CubicGraph& g, const EdgeList& m1, const EdgeList& m2, const EdgeList& m3) {
  Core core;
  core.matchings = {sorted_unique(m1), sorted_unique(m2), sorted_unique(m3)};
  for (int i = 0; i < 3; ++i) {
    if (!is_perfect_matching(g, core.matchings[i])) {
      throw GraphError("M" + std::to_string(i + 1) + " is not a perfect matching");
    }
  }
  const int m = g.num_edges();
  core.class_of.assign(m, 0);
  for (const EdgeList& mi : core.matchings)
    for (EdgeId e : mi) ++core.class_of[e];
  for (EdgeId e = 0; e < m; ++e) core.classes[core.class_of[e]].push_back(e);
  core.k = static_cast<int>(core.classes[0].size());

  // Each vertex sees multiplicities summing to 3; E0 u E2 has degree 0 or 2.
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    int sum = 0, circuit_degree = 0, e3 = 0;
    for (EdgeId e : g.incident(v)) {
      sum += core.class_of[e];
      circuit_degree += core.class_of[e] == 0 || core.class_of[e] == 2;
      e3 += core.class_of[e] == 3;
    }
    if (sum != 3 || (circuit_degree != 0 && circuit_degree != 2) || e3 > 1) {
      throw std::logic_error("core invariant violated at vertex " + std::to_string(v));
    }
  }
  const auto circuits = circuits_of(g, core.circuit_edges());
  for (const Circuit& c : circuits) {
    int e0 = 0;
    for (EdgeId e : c.edges) e0 += core.class_of[e] == 0;
    if (c.length() + sigma(g, core, c) != 2 * e0) {
      throw std::logic_error("core circuit identity |E(C)| + sigma(C) = 2|E(C) n E0| violated");
    }
  }
  return core;
}

int count_odd_circuits(const CubicGraph& g, const Core& core) {
  int odd = 0;
  for (const Circuit& c : circuits_of(g, core.circuit_edges())) odd += c.odd();
  return odd;
}

namespace {

using Word = std::uint64_t;

struct BitMatchings {
  int words = 0;
  std::vector<Word> data;  // matchings stored back to back

  const Word* at(std::size_t i) const { return data.data() + i * words; }
};

int popcount_or(const Word* a, const Word* b, int words) {
  int c = 0;
  for (int w = 0; w < words; ++w) c += std::popcount(a[w] | b[w]);
  return c;
}

}  // namespace

Mu3Result compute_mu3(const CubicGraph& g, long long budget) {
  if (budget <= 0) throw std::invalid_argument("mu3 budget must be positive");
  Mu3Result result;
  const int m = g.num_edges();
  const int half = g.num_vertices() / 2;

  const std::vector<EdgeList> matchings = enumerate_perfect_matchings(g, std::numeric_limits<long long>::max());
  result.matchings = static_cast<long long>(matchings.size());
  if (matchings.empty()) throw GraphError("graph has no perfect matching");

  BitMatchings bits;
  bits.words = (m + 63) / 64;
  bits.data.assign(matchings.size() * bits.words, 0);
  for (std::size_t i = 0; i < matchings.size(); ++i)
    for (EdgeId e : matchings[i]) bits.data[i * bits.words + e / 64] |= Word{1} << (e % 64);

  const std::size_t count = matchings.size();
  int best = std::numeric_limits<int>::max();
  int best_odd = 0;
  EdgeList best_e0;
  std::array<std::size_t, 3> best_triple{0, 0, 0};
  std::vector<Word> pair(bits.words);
  bool exhausted = false;

  auto consider = [&](std::size_t i, std::size_t j, std::size_t l, int k) {
    if (k > best) return;
    Core core = core_from_triple(g, matchings[i], matchings[j], matchings[l]);
    const int odd = count_odd_circuits(g, core);
    if (k < best) {
      best = k;
      best_odd = odd;
      best_e0 = core.E(0);
      best_triple = {i, j, l};
      result.tied_triples = 1;
      return;
    }
    ++result.tied_triples;
    if (odd < best_odd || (odd == best_odd && core.E(0) < best_e0)) {
      best_odd = odd;
      best_e0 = core.E(0);
      best_triple = {i, j, l};
    }
  };

  for (std::size_t i = 0; i < count && !exhausted && best > 0; ++i) {
    for (std::size_t j = i; j < count && !exhausted && best > 0; ++j) {
      const Word* a = bits.at(i);
      const Word* b = bits.at(j);
      int covered = 0;
      for (int w = 0; w < bits.words; ++w) {
        pair[w] = a[w] | b[w];
        covered += std::popcount(pair[w]);
      }
      // A third matching adds at most n/2 new edges.
      if (m - covered - half > best) continue;
      for (std::size_t l = j; l < count; ++l) {
        if (result.triples_examined >= budget) {
          exhausted = true;
          break;
        }
        ++result.triples_examined;
        const int k = m - popcount_or(pair.data(), bits.at(l), bits.words);
        consider(i, j, l, k);
        if (best == 0) break;
      }
    }
  }

  result.mu3 = best;
  result.exact = !exhausted;
  result.witness = core_from_triple(g, matchings[best_triple[0]], matchings[best_triple[1]],
                                    matchings[best_triple[2]]);
  // The 1/5 bound holds for bridgeless graphs only.
  if (result.exact && 5 * result.mu3 > m && validate(g).is_bridgeless) {
    throw std::logic_error("mu3 exceeds |E|/5");
  }
  return result;
}

int CoreStructure::circuit_index(const Circuit& c) const {
  if (c.vertices.empty()) return -1;
  const int idx = circuit_of_vertex[c.vertices.front()];
  if (idx < 0) return -1;
  const Circuit& own = circuits[idx];
  if (own.length() != c.length()) return -1;
  if (sorted_unique(own.edges) != sorted_unique(c.edges)) return -1;
  return idx;
}

CoreStructure analyze_core(const CubicGraph& g, const Core& core) {
  CoreStructure s;
  s.circuits = circuits_of(g, core.circuit_edges());
  s.circuit_of_vertex.assign(g.num_vertices(), -1);
  s.e3_at.assign(g.num_vertices(), -1);
  for (EdgeId e : core.E(3)) {
    s.e3_at[g.edge(e).u] = e;
    s.e3_at[g.edge(e).v] = e;
  }
  for (std::size_t i = 0; i < s.circuits.size(); ++i) {
    int sig = 0;
    for (VertexId v : s.circuits[i].vertices) {
      s.circuit_of_vertex[v] = static_cast<int>(i);
      sig += s.e3_at[v] >= 0;
    }
    s.sigma.push_back(sig);
  }
  return s;
}

int sigma(const CubicGraph& g, const Core& core, const Circuit& c) {
  const int len = c.length();
  if (len < 2 || static_cast<int>(c.vertices.size()) != len) throw GraphError("not a circuit");
  for (int i = 0; i < len; ++i) {
    const EdgeId e = c.edges[i];
    if (e < 0 || e >= g.num_edges() || !g.has_endpoint(e, c.vertices[i]) ||
        !g.has_endpoint(e, c.vertices[(i + 1) % len])) {
      throw GraphError("not a circuit");
    }
    if (core.class_of[e] != 0 && core.class_of[e] != 2) {
      throw GraphError("circuit is not contained in G[E0 u E2]");
    }
  }
  int count = 0;
  for (VertexId v : c.vertices) {
    for (EdgeId e : g.incident(v)) count += core.class_of[e] == 3;
  }
  return count;
}

std::vector<Circuit> omega(const CubicGraph& g, const Core& core) {
  std::vector<Circuit> out;
  for (Circuit& c : circuits_of(g, core.circuit_edges())) {
    if (c.length() <= 5 && sigma(g, core, c) == 1) out.push_back(std::move(c));
  }
  return out;
}

namespace {

void require_in_omega(const CubicGraph& g, const Core& core, const Circuit& c) {
  if (c.length() > 5 || sigma(g, core, c) != 1) throw GraphError("circuit is not in Omega");
}

}  // namespace

bool gc_connected(const CubicGraph& g, const Core& core, const Circuit& c1, const Circuit& c2) {
  require_in_omega(g, core, c1);
  require_in_omega(g, core, c2);
  std::vector<char> on_c2(g.num_vertices(), 0);
  for (VertexId v : c2.vertices) on_c2[v] = 1;
  for (VertexId v : c1.vertices) {
    for (EdgeId e : g.incident(v)) {
      if (core.class_of[e] == 1 && on_c2[g.other_end(e, v)]) return true;
    }
  }
  return false;
}

}  // namespace pnc
