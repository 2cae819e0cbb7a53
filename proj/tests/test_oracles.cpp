#include <gtest/gtest.h>

#include "pnc/core.hpp"
#include "pnc/oracles.hpp"
#include "support.hpp"

using namespace pnc;

namespace {

void expect_all_normal(const CubicGraph& g, const PartialColoring& psi) {
  EXPECT_TRUE(psi.is_total());
  EXPECT_TRUE(psi.is_proper());
  EXPECT_EQ(support::naive_abnormal_count(psi), 0) << to_graph6(g);
}

}  // namespace

TEST(BruteForceNormal, SmallFamilies) {
  for (Family f : {Family::K4, Family::K33, Family::Petersen}) {
    const CubicGraph g = generate_graph(f);
    const NormalSearch s = brute_force_normal(g);
    ASSERT_EQ(s.status, OracleStatus::Found);
    expect_all_normal(g, *s.coloring);
  }
}

TEST(BruteForceNormal, Flower5) {
  const CubicGraph g = generate_graph(Family::Flower, 5);
  const NormalSearch s = brute_force_normal(g);
  ASSERT_EQ(s.status, OracleStatus::Found);
  expect_all_normal(g, *s.coloring);
}

TEST(BruteForceNormal, SymmetryBreakAtVertexZero) {
  const CubicGraph g = generate_graph(Family::Petersen);
  const NormalSearch s = brute_force_normal(g);
  ASSERT_TRUE(s.coloring);
  ColorMask at0 = 0;
  for (EdgeId e : g.incident(0)) at0 |= color_bit(s.coloring->color(e));
  EXPECT_EQ(at0, kLowColors);
}

TEST(BruteForceNormal, TinyBudgetIsReported) {
  const NormalSearch s = brute_force_normal(generate_graph(Family::Petersen), 1);
  EXPECT_EQ(s.status, OracleStatus::BudgetExceeded);
  EXPECT_FALSE(s.coloring);
  EXPECT_STREQ(to_string(s.status), "BUDGET_EXCEEDED");
}

TEST(BruteForceNormal, ThetaGraphIsAllPoor) {
  // Each edge of the 3-edge multigraph sees exactly the three colors.
  const CubicGraph g = parse_edgelist("2 3\n0 1\n0 1\n0 1\n");
  const NormalSearch s = brute_force_normal(g);
  EXPECT_EQ(s.status, OracleStatus::Found);
  expect_all_normal(g, *s.coloring);
}

TEST(MaxNormal, FrozenValues) {
  const std::vector<std::pair<Family, int>> expected{{Family::K4, 6}, {Family::K33, 9}, {Family::Petersen, 15}};
  for (const auto& [f, count] : expected) {
    const CubicGraph g = generate_graph(f);
    const MaxNormalResult r = max_normal_brute(g);
    ASSERT_EQ(r.status, OracleStatus::Found);
    EXPECT_EQ(r.count, count);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(g.num_edges() - support::naive_abnormal_count(*r.witness), count);
  }
}

TEST(MaxNormal, AtLeastEdgesMinusMu3) {
  for (int n : {6, 8, 10}) {
    for (const CubicGraph& g : support::bridgeless_corpus(n)) {
      const MaxNormalResult r = max_normal_brute(g);
      ASSERT_EQ(r.status, OracleStatus::Found);
      EXPECT_GE(r.count, g.num_edges() - support::naive_mu3(g));
      EXPECT_EQ(g.num_edges() - support::naive_abnormal_count(*r.witness), r.count);
    }
  }
}

TEST(Petersen, IdentityIsAColoring) {
  const CubicGraph& p = petersen_graph();
  EXPECT_EQ(p.num_vertices(), 10);
  HMapping id;
  for (EdgeId e = 0; e < p.num_edges(); ++e) id.edge_map.push_back(e);
  EXPECT_TRUE(is_petersen_coloring(p, id));
  // Exchanging two edge images breaks the star condition somewhere.
  std::swap(id.edge_map[0], id.edge_map[14]);
  EXPECT_FALSE(is_petersen_coloring(p, id));
}

TEST(Petersen, ThreeColorableGraphsMap) {
  // A 3-edge-coloring maps onto the star at any vertex of P.
  for (const CubicGraph& g : support::bridgeless_corpus(10)) {
    if (!support::naive_three_colorable(g)) continue;
    const PetersenSearch s = petersen_coloring(g);
    ASSERT_EQ(s.status, OracleStatus::Found);
    EXPECT_TRUE(is_petersen_coloring(g, *s.mapping));
  }
}

TEST(Petersen, PullbackIsNormal) {
  for (Family f : {Family::Petersen, Family::K33}) {
    const CubicGraph g = generate_graph(f);
    const PetersenSearch s = petersen_coloring(g);
    ASSERT_EQ(s.status, OracleStatus::Found);
    expect_all_normal(g, normal_coloring_from(g, *s.mapping));
  }
  const CubicGraph g = generate_graph(Family::Flower, 5);
  const PetersenSearch s = petersen_coloring(g);
  ASSERT_EQ(s.status, OracleStatus::Found);
  EXPECT_TRUE(is_petersen_coloring(g, *s.mapping));
  expect_all_normal(g, normal_coloring_from(g, *s.mapping));
}

TEST(Oracles, AgreeOnCorpus) {
  // Both searches are exhaustive, so found/not-found must match, and a
  // Petersen coloring always yields a normal one.
  for (int n : {4, 6, 8, 10, 12}) {
    for (const CubicGraph& g : support::bridgeless_corpus(n)) {
      const NormalSearch a = brute_force_normal(g);
      const PetersenSearch b = petersen_coloring(g);
      ASSERT_NE(a.status, OracleStatus::BudgetExceeded);
      ASSERT_NE(b.status, OracleStatus::BudgetExceeded);
      EXPECT_EQ(a.status, b.status) << to_graph6(g);
      if (a.coloring) expect_all_normal(g, *a.coloring);
      if (b.mapping) expect_all_normal(g, normal_coloring_from(g, *b.mapping));
    }
  }
}
