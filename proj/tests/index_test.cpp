#include <gtest/gtest.h>

#include <cmath>

#include "gaidx/error.hpp"
#include "gaidx/families.hpp"
#include "gaidx/index.hpp"
#include "support.hpp"

namespace gaidx {
namespace {

TEST(Terms, MatchDefinitions) {
  EXPECT_DOUBLE_EQ(ga_term(2, 2), 1.0);
  EXPECT_NEAR(ga_term(1, 3), std::sqrt(3.0) / 2.0, 1e-15);
  EXPECT_NEAR(ag_term(1, 3), 2.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(ratio_term(4.0), 0.8, 1e-15);
  EXPECT_NEAR(degree_two_term(4.0), 2.0 * std::sqrt(2.0) * 2.0 / 6.0, 1e-15);
  EXPECT_THROW(ratio_term(0.5), DomainError);
  EXPECT_THROW(degree_two_term(1.5), DomainError);
}

TEST(Terms, RatioTermDecreasesOnItsDomain) {
  double prev = ratio_term(1.0);
  EXPECT_DOUBLE_EQ(prev, 1.0);
  for (double x = 1.01; x <= 100.0; x += 0.01) {
    const double cur = ratio_term(x);
    ASSERT_LT(cur, prev) << "x=" << x;
    ASSERT_GT(cur, 0.0);
    prev = cur;
  }
}

TEST(Terms, DegreeTwoTermExceedsRatioTerm) {
  EXPECT_DOUBLE_EQ(degree_two_term(2.0), 1.0);
  for (double x = 2.0; x <= 50.0 + 1e-12; x += 0.01) {
    ASSERT_GT(degree_two_term(x), ratio_term(x)) << "x=" << x;
  }
}

TEST(Terms, RatioTermDifferenceGrid) {
  // f(x) - f(y) grows with the gap and stays positive for y > x >= 1.
  for (int x = 1; x <= 30; ++x) {
    for (int y = x + 1; y <= 31; ++y) {
      const double d = ratio_term(x) - ratio_term(y);
      ASSERT_GT(d, 0.0);
      if (y < 31) ASSERT_LT(d, ratio_term(x) - ratio_term(y + 1));
    }
  }
}

TEST(Index, KnownValues) {
  EXPECT_NEAR(ga_index(test::paw()), 3.825617198010981, 1e-12);
  EXPECT_NEAR(ag_index(test::paw()), 4.195941990698567, 1e-12);
  EXPECT_NEAR(ga_index(test::triangle_with_path()), 4.882196732921877, 1e-12);
  const Graph claw = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_NEAR(ga_index(claw), 3.0 * std::sqrt(3.0) / 2.0, 1e-12);
  EXPECT_NEAR(ag_index(claw), 2.0 * std::sqrt(3.0), 1e-12);
  EXPECT_THROW(ga_index(Graph::build(3, {})), DomainError);
}

TEST(Index, CycleEqualsOrder) {
  for (int n = 3; n <= 64; ++n) {
    EXPECT_NEAR(ga_index(Graph::cycle(n)), n, 1e-12);
    EXPECT_NEAR(ag_index(Graph::cycle(n)), n, 1e-12);
  }
}

TEST(Index, MatchesOracleOnEnumeratedClasses) {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& s : oracle::unicyclic_by_leaf_extension(n)) {
      const Graph g = test::from_simple(s);
      ASSERT_NEAR(ga_index(g), oracle::ga(s), 1e-12);
      ASSERT_NEAR(ag_index(g), oracle::ag(s), 1e-12);
    }
  }
}

TEST(Index, ProductAndPerEdgeBounds) {
  for (int n = 3; n <= 9; ++n) {
    const double floor = 2.0 * std::sqrt(n - 1.0) / n;
    for (const auto& s : oracle::unicyclic_by_leaf_extension(n)) {
      const Graph g = test::from_simple(s);
      const double m = g.size();
      // Cauchy-Schwarz: each ga term is the reciprocal of the ag term.
      ASSERT_GE(ga_index(g) * ag_index(g), m * m - 1e-9);
      ASSERT_LE(ga_index(g), m + 1e-12);
      for (const auto& c : edge_contributions(g)) {
        ASSERT_LE(c.du, c.dv);
        ASSERT_NEAR(c.rd, static_cast<double>(c.dv) / c.du, 1e-15);
        ASSERT_NEAR(c.ga, ratio_term(c.rd), 1e-15);
        ASSERT_GE(c.ga, floor - 1e-12);
        ASSERT_LE(c.ga, 1.0 + 1e-15);
      }
    }
  }
}

TEST(Index, EdgeContributionRequiresEdge) {
  EXPECT_THROW(edge_contribution(test::paw(), {0, 3}), GraphError);
  const auto c = edge_contribution(test::paw(), {3, 2});
  EXPECT_EQ(c.du, 1);
  EXPECT_EQ(c.dv, 3);
}

}  // namespace
}  // namespace gaidx
