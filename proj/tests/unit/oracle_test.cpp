// Sanity checks for the brute-force references on hand-computable inputs, so
// that agreement with the library means something.

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "random_instances.hpp"

namespace symmatch {
namespace {

TEST(Oracle, MatchingSizeByHand) {
  EXPECT_EQ(oracle::max_matching_size(FiniteBigraph(0, 0, {})), 0);
  EXPECT_EQ(oracle::max_matching_size(FiniteBigraph::complete(3, 6)), 3);
  EXPECT_EQ(oracle::max_matching_size(FiniteBigraph(3, 3, {{0, 0}, {1, 0}, {2, 0}, {2, 2}})), 2);
  // A path a0-b0-a1-b1 needs the non-greedy choice a0-b0, a1-b1.
  EXPECT_EQ(oracle::max_matching_size(FiniteBigraph(2, 2, {{0, 0}, {1, 0}, {1, 1}})), 2);
}

TEST(Oracle, DeficiencyByHand) {
  EXPECT_EQ(oracle::deficiency(FiniteBigraph::complete(3, 6), Side::kRight), 3);
  EXPECT_EQ(oracle::deficiency(FiniteBigraph::complete(3, 6), Side::kLeft), 0);
  EXPECT_EQ(oracle::deficiency(FiniteBigraph(2, 0, {}), Side::kLeft), 2);
}

TEST(Oracle, KuhnAgreesWithExhaustiveSearch) {
  testing::Rng rng(8);
  for (int k = 0; k < 200; ++k) {
    const auto g = testing::random_bigraph(rng, 6, 6, 0.35);
    std::vector<std::vector<int>> adj(6);
    for (const auto& e : g.edges()) adj[e.left].push_back(e.right);
    EXPECT_EQ(oracle::kuhn_matching_size(6, 6, adj), oracle::max_matching_size(g));
  }
}

TEST(Oracle, KonigDeficiencyFormula) {
  testing::Rng rng(12);
  for (int k = 0; k < 200; ++k) {
    const auto g = testing::random_bigraph(rng, 5, 7, 0.3);
    EXPECT_EQ(oracle::deficiency(g, Side::kLeft), 5 - oracle::max_matching_size(g));
    EXPECT_EQ(oracle::deficiency(g, Side::kRight), 7 - oracle::max_matching_size(g));
  }
}

TEST(Oracle, TorusBottleneckByHand) {
  EXPECT_EQ(oracle::torus_bottleneck_squared(RationalRotation::identity()), Ratio(0));
  EXPECT_EQ(oracle::torus_bottleneck_squared(
                RationalRotation::identity({Ratio(1, 2), Ratio(1, 2)})),
            Ratio(1, 2));
  EXPECT_EQ(oracle::torus_bottleneck_squared(RationalRotation::identity({Ratio(1, 3), Ratio(0)})),
            Ratio(1, 9));
  // A quarter turn maps Z^2 onto itself.
  EXPECT_EQ(oracle::torus_bottleneck_squared(RationalRotation::make(0, 1, 1)), Ratio(0));
}

TEST(Generators, RandomSymGraphsStayInFamily) {
  testing::Rng rng(1);
  for (int k = 0; k < 100; ++k) {
    const auto family = k % 2 == 0 ? Family::kZd : Family::kCyclic;
    const auto sg = testing::random_proper_symgraph(rng, family);
    EXPECT_EQ(sg.group().family, family);
    EXPECT_LE(sg.a_orbits(), 4);
    EXPECT_LE(sg.b_orbits(), 4);
    EXPECT_LE(sg.triples().size(), 12u);
    if (family == Family::kCyclic) {
      EXPECT_GE(sg.group().param, 2);
      EXPECT_LE(sg.group().param, 8);
    }
    for (const auto& t : sg.triples()) {
      if (family == Family::kZd) {
        for (auto c : t.g.data()) EXPECT_TRUE(c == 0 || c == 1);
      }
    }
  }
}

}  // namespace
}  // namespace symmatch
