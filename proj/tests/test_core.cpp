#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "pnc/coloring.hpp"
#include "pnc/core.hpp"
#include "support.hpp"

using namespace pnc;

namespace {

std::vector<EdgeList> sorted_matchings(std::vector<EdgeList> ms) {
  for (EdgeList& m : ms) std::sort(m.begin(), m.end());
  std::sort(ms.begin(), ms.end());
  return ms;
}

// Checks every structural property of a core straight from its definition.
void expect_core_invariants(const CubicGraph& g, const Core& core) {
  int total = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    int in = 0;
    for (const EdgeList& m : core.matchings) in += contains(m, e) ? 1 : 0;
    EXPECT_EQ(core.class_of[e], in);
    EXPECT_TRUE(contains(core.E(in), e));
  }
  for (int i = 0; i < 4; ++i) total += static_cast<int>(core.E(i).size());
  EXPECT_EQ(total, g.num_edges());
  EXPECT_EQ(core.k, static_cast<int>(core.E(0).size()));
  // E0 u E2 has degree 0 or 2 everywhere, and each circuit C satisfies
  // |E(C)| + sigma(C) = 2 |E(C) n E0|.
  const EdgeList ce = core.circuit_edges();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    int d = 0;
    for (EdgeId e : g.incident(v)) d += contains(ce, e) ? 1 : 0;
    EXPECT_TRUE(d == 0 || d == 2);
  }
  for (const Circuit& c : circuits_of(g, ce)) {
    const int in_e0 = static_cast<int>(set_intersection(sorted_unique(c.edges), core.E(0)).size());
    EXPECT_EQ(c.length() + sigma(g, core, c), 2 * in_e0);
  }
}

}  // namespace

TEST(Matchings, SpecExamples) {
  EXPECT_EQ(enumerate_perfect_matchings(generate_graph(Family::K4)).size(), 3u);
  EXPECT_EQ(enumerate_perfect_matchings(generate_graph(Family::Petersen)).size(), 6u);
  // Three rungs, or one rung with the two triangle edges opposite it.
  EXPECT_EQ(enumerate_perfect_matchings(generate_graph(Family::Prism, 3)).size(), 4u);
}

TEST(Matchings, AgreeWithNaiveEnumeration) {
  for (int n : {4, 6, 8, 10, 12}) {
    for (const CubicGraph& g : support::corpus(n)) {
      const auto lib = enumerate_perfect_matchings(g);
      for (const EdgeList& m : lib) EXPECT_TRUE(is_perfect_matching(g, m));
      EXPECT_EQ(sorted_matchings(lib), sorted_matchings(support::naive_matchings(g)));
    }
  }
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto g = support::random_cubic(12, rng, false);
    ASSERT_TRUE(g);
    EXPECT_EQ(sorted_matchings(enumerate_perfect_matchings(*g)), sorted_matchings(support::naive_matchings(*g)));
  }
}

TEST(Matchings, LimitAndEarlyStop) {
  const CubicGraph g = generate_graph(Family::Petersen);
  EXPECT_EQ(enumerate_perfect_matchings(g, 2).size(), 2u);
  int seen = 0;
  for_each_perfect_matching(g, 100, [&](const EdgeList&) { return ++seen < 4; });
  EXPECT_EQ(seen, 4);
}

TEST(CoreFromTriple, K4DistinctMatchings) {
  const CubicGraph g = generate_graph(Family::K4);
  const auto ms = enumerate_perfect_matchings(g);
  const Core c = core_from_triple(g, ms[0], ms[1], ms[2]);
  EXPECT_EQ(c.k, 0);
  EXPECT_EQ(c.E(1).size(), 6u);
  EXPECT_TRUE(c.E(2).empty());
  EXPECT_TRUE(c.E(3).empty());
}

TEST(CoreFromTriple, RepeatedMatching) {
  const CubicGraph g = generate_graph(Family::K4);
  const auto ms = enumerate_perfect_matchings(g);
  const Core c = core_from_triple(g, ms[0], ms[0], ms[0]);
  // Everything off the single matching is uncovered: 6 - 2 edges.
  EXPECT_EQ(c.k, 4);
  EXPECT_EQ(c.E(3), sorted_unique(ms[0]));
  EXPECT_TRUE(c.E(1).empty());
  EXPECT_EQ(major_coloring(g, c).colored_count(), 0);
}

TEST(CoreFromTriple, PetersenDistinctMatchings) {
  const CubicGraph g = generate_graph(Family::Petersen);
  const auto ms = enumerate_perfect_matchings(g);
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      for (std::size_t l = j + 1; l < ms.size(); ++l) {
        const Core c = core_from_triple(g, ms[i], ms[j], ms[l]);
        EXPECT_EQ(c.k, 3);
        EXPECT_EQ(c.E(2).size(), 3u);
        EXPECT_TRUE(c.E(3).empty());
        const auto cs = circuits_of(g, c.circuit_edges());
        ASSERT_EQ(cs.size(), 1u);
        EXPECT_EQ(cs[0].length(), 6);
        EXPECT_EQ(sigma(g, c, cs[0]), 0);
        EXPECT_EQ(major_coloring(g, c).colored_count(), 9);
      }
}

TEST(CoreFromTriple, RejectsNonMatching) {
  const CubicGraph g = generate_graph(Family::K4);
  const auto ms = enumerate_perfect_matchings(g);
  EXPECT_THROW(core_from_triple(g, ms[0], ms[1], EdgeList{0}), GraphError);
}

TEST(CoreFromTriple, InvariantsOnRandomCores) {
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    const auto g = support::random_cubic(8 + 2 * (i % 6), rng, i % 2 == 0);
    ASSERT_TRUE(g);
    const auto ms = enumerate_perfect_matchings(*g);
    for (int t = 0; t < 5; ++t) expect_core_invariants(*g, support::random_core(*g, ms, rng));
  }
}

TEST(Mu3, SpecExamples) {
  EXPECT_EQ(compute_mu3(generate_graph(Family::K4)).mu3, 0);
  EXPECT_EQ(compute_mu3(generate_graph(Family::K33)).mu3, 0);
  EXPECT_EQ(compute_mu3(generate_graph(Family::Prism, 5)).mu3, 0);
  const Mu3Result p = compute_mu3(generate_graph(Family::Petersen));
  EXPECT_EQ(p.mu3, 3);
  EXPECT_TRUE(p.exact);
  EXPECT_EQ(p.matchings, 6);
  // Value fixed by the naive triple enumeration in support.cpp.
  const CubicGraph f5 = generate_graph(Family::Flower, 5);
  EXPECT_EQ(support::naive_mu3(f5), 3);
  EXPECT_EQ(compute_mu3(f5).mu3, 3);
}

TEST(Mu3, AgreesWithNaiveTriples) {
  for (int n : {4, 6, 8, 10, 12}) {
    for (const CubicGraph& g : support::bridgeless_corpus(n)) {
      const Mu3Result r = compute_mu3(g);
      EXPECT_TRUE(r.exact);
      EXPECT_EQ(r.mu3, support::naive_mu3(g));
      EXPECT_EQ(r.witness.k, r.mu3);
      expect_core_invariants(g, r.witness);
    }
  }
}

TEST(Mu3, ZeroIffThreeColorable) {
  for (int n : {4, 6, 8, 10, 12}) {
    for (const CubicGraph& g : support::bridgeless_corpus(n)) {
      EXPECT_EQ(compute_mu3(g).mu3 == 0, support::naive_three_colorable(g));
    }
  }
}

TEST(Mu3, FifthBoundOnCorpus) {
  for (int n : {4, 6, 8, 10, 12, 14}) {
    for (const CubicGraph& g : support::bridgeless_corpus(n)) {
      const Mu3Result r = compute_mu3(g);
      if (r.exact) {
        EXPECT_LE(5 * r.mu3, g.num_edges());
      }
    }
  }
}

TEST(Mu3, RelabelInvariant) {
  std::mt19937 rng(17);
  const std::vector<CubicGraph> gs{generate_graph(Family::Petersen), generate_graph(Family::Flower, 3),
                                   generate_graph(Family::Flower, 5)};
  for (const CubicGraph& g : gs) {
    const int mu = compute_mu3(g).mu3;
    for (int t = 0; t < 3; ++t) {
      std::vector<VertexId> perm(g.num_vertices());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const CubicGraph h = support::relabel(g, perm);
      const Mu3Result r = compute_mu3(h);
      EXPECT_EQ(r.mu3, mu);
      EXPECT_EQ(count_odd_circuits(h, r.witness), count_odd_circuits(g, compute_mu3(g).witness));
    }
  }
}

TEST(Mu3, WitnessHasFewestOddCircuits) {
  for (const CubicGraph& g : support::bridgeless_corpus(10)) {
    const Mu3Result r = compute_mu3(g);
    const auto ms = support::naive_matchings(g);
    int fewest = 1 << 20;
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = i; j < ms.size(); ++j)
        for (std::size_t l = j; l < ms.size(); ++l) {
          if (support::uncovered(g, ms[i], ms[j], ms[l]) != r.mu3) continue;
          fewest = std::min(fewest, count_odd_circuits(g, core_from_triple(g, ms[i], ms[j], ms[l])));
        }
    EXPECT_EQ(count_odd_circuits(g, r.witness), fewest);
  }
}

TEST(Mu3, BudgetGivesUpperBound) {
  const CubicGraph g = generate_graph(Family::Flower, 5);
  const Mu3Result r = compute_mu3(g, 1);
  EXPECT_FALSE(r.exact);
  EXPECT_GE(r.mu3, 3);
  EXPECT_EQ(r.witness.k, r.mu3);
}

TEST(Sigma, IdentityForcesValues) {
  // In a K4 core with M1 = M2 = M3 = M, E0 u E2 is the 4-circuit off M and
  // every vertex meets M, so sigma = 4 with all four circuit edges in E0.
  const CubicGraph g = generate_graph(Family::K4);
  const auto ms = enumerate_perfect_matchings(g);
  const Core c = core_from_triple(g, ms[0], ms[0], ms[0]);
  const auto cs = circuits_of(g, c.circuit_edges());
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].length(), 4);
  EXPECT_EQ(sigma(g, c, cs[0]), 4);
}

TEST(Sigma, RejectsForeignCircuit) {
  const CubicGraph g = generate_graph(Family::Petersen);
  const Mu3Result r = compute_mu3(g);
  Circuit fake{{0, 1}, {0}};
  EXPECT_THROW(sigma(g, r.witness, fake), GraphError);
}

TEST(Omega, PetersenHasNone) {
  const CubicGraph g = generate_graph(Family::Petersen);
  EXPECT_TRUE(omega(g, compute_mu3(g).witness).empty());
}

TEST(Omega, MembersAreShortWithSigmaOne) {
  std::mt19937 rng(23);
  int seen = 0;
  for (int i = 0; i < 60; ++i) {
    const auto g = support::random_cubic(12, rng);
    ASSERT_TRUE(g);
    const auto ms = enumerate_perfect_matchings(*g);
    const Core c = support::random_core(*g, ms, rng);
    const auto om = omega(*g, c);
    int expected = 0;
    for (const Circuit& circ : circuits_of(*g, c.circuit_edges())) {
      if (circ.length() <= 5 && sigma(*g, c, circ) == 1) ++expected;
    }
    EXPECT_EQ(static_cast<int>(om.size()), expected);
    for (const Circuit& circ : om) {
      EXPECT_LE(circ.length(), 5);
      EXPECT_EQ(sigma(*g, c, circ), 1);
    }
    seen += static_cast<int>(om.size());
  }
  EXPECT_GT(seen, 0);
}

TEST(GcConnected, NeedsAnE1Edge) {
  std::mt19937 rng(29);
  int checked = 0;
  for (int i = 0; i < 200 && checked < 20; ++i) {
    const auto g = support::random_cubic(14, rng, false);
    ASSERT_TRUE(g);
    const auto ms = enumerate_perfect_matchings(*g);
    const Core c = support::random_core(*g, ms, rng);
    const auto om = omega(*g, c);
    for (std::size_t a = 0; a < om.size(); ++a)
      for (std::size_t b = a + 1; b < om.size(); ++b) {
        bool joined = false;
        for (EdgeId e : c.E(1)) {
          const Edge& ed = g->edge(e);
          const bool ua = std::count(om[a].vertices.begin(), om[a].vertices.end(), ed.u) > 0;
          const bool va = std::count(om[a].vertices.begin(), om[a].vertices.end(), ed.v) > 0;
          const bool ub = std::count(om[b].vertices.begin(), om[b].vertices.end(), ed.u) > 0;
          const bool vb = std::count(om[b].vertices.begin(), om[b].vertices.end(), ed.v) > 0;
          if ((ua && vb) || (ub && va)) joined = true;
        }
        EXPECT_EQ(gc_connected(*g, c, om[a], om[b]), joined);
        ++checked;
      }
  }
  EXPECT_GT(checked, 0);
}

TEST(AnalyzeCore, Lookups) {
  std::mt19937 rng(31);
  for (int i = 0; i < 20; ++i) {
    const auto g = support::random_cubic(12, rng);
    ASSERT_TRUE(g);
    const Core c = support::random_core(*g, enumerate_perfect_matchings(*g), rng);
    const CoreStructure s = analyze_core(*g, c);
    for (std::size_t ci = 0; ci < s.circuits.size(); ++ci) {
      EXPECT_EQ(s.circuit_index(s.circuits[ci]), static_cast<int>(ci));
      EXPECT_EQ(s.sigma[ci], sigma(*g, c, s.circuits[ci]));
      for (VertexId v : s.circuits[ci].vertices) EXPECT_EQ(s.circuit_of_vertex[v], static_cast<int>(ci));
    }
    for (VertexId v = 0; v < g->num_vertices(); ++v) {
      if (s.e3_at[v] >= 0) {
        EXPECT_EQ(c.class_of[s.e3_at[v]], 3);
      }
    }
  }
}
