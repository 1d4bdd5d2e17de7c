#include <gtest/gtest.h>

#include "oracles.hpp"
#include "random_instances.hpp"
#include "symmatch/bigraph.hpp"
#include "symmatch/error.hpp"

namespace symmatch {
namespace {

FiniteBigraph path_graph() { return FiniteBigraph(2, 1, {{0, 0}, {1, 0}}); }

TEST(Bigraph, RejectsBadEdges) {
  EXPECT_THROW(FiniteBigraph(1, 1, {{0, 1}}), InputError);
  EXPECT_THROW(FiniteBigraph(1, 1, {{-1, 0}}), InputError);
  EXPECT_THROW(FiniteBigraph(2, 2, {{0, 0}, {0, 0}}), InputError);
  EXPECT_THROW(FiniteBigraph(-1, 0, {}), InputError);
  EXPECT_THROW(FiniteBigraph(1, 1, {{0, 0}}, {-1.0}), InputError);
  EXPECT_THROW(FiniteBigraph(1, 1, {{0, 0}}, {1.0, 2.0}), InputError);
}

TEST(Bigraph, AdjacencyIsSorted) {
  const FiniteBigraph g(2, 3, {{1, 2}, {0, 2}, {0, 0}, {1, 1}});
  const auto a0 = g.adjacent(Side::kLeft, 0);
  EXPECT_EQ(std::vector<int>(a0.begin(), a0.end()), (std::vector<int>{0, 2}));
  const auto b2 = g.adjacent(Side::kRight, 2);
  EXPECT_EQ(std::vector<int>(b2.begin(), b2.end()), (std::vector<int>{0, 1}));
  EXPECT_TRUE(g.has_edge(1, 1));
  EXPECT_FALSE(g.has_edge(1, 0));
  EXPECT_EQ(g.transposed().left_count(), 3);
  EXPECT_TRUE(g.transposed().has_edge(2, 0));
}

TEST(Neighborhood, SmallCases) {
  EXPECT_TRUE(neighborhood(FiniteBigraph::complete(3, 3), Side::kLeft, {}).empty());
  const std::vector<int> zero{0};
  EXPECT_EQ(neighborhood(FiniteBigraph::complete(3, 3), Side::kLeft, zero),
            (IndexSet{0, 1, 2}));
  const std::vector<int> both{0, 1};
  EXPECT_EQ(neighborhood(path_graph(), Side::kLeft, both), (IndexSet{0}));
}

TEST(MaxMatching, SmallCases) {
  EXPECT_EQ(max_matching(FiniteBigraph(0, 0, {})).size(), 0u);
  const auto k33 = FiniteBigraph::complete(3, 3);
  const auto m = max_matching(k33);
  EXPECT_EQ(m.size(), 3u);
  EXPECT_TRUE(is_perfect(k33, m));
  const auto k36 = FiniteBigraph::complete(3, 6);
  const auto m36 = max_matching(k36);
  EXPECT_EQ(m36.size(), 3u);
  EXPECT_FALSE(is_perfect(k36, m36));
  EXPECT_TRUE(covers(m36, Side::kLeft, 3));
  EXPECT_FALSE(covers(m36, Side::kRight, 6));
  EXPECT_TRUE(is_perfect(FiniteBigraph(0, 0, {}), Matching{}));
}

TEST(MaxMatching, IsDeterministic) {
  testing::Rng rng(11);
  for (int k = 0; k < 20; ++k) {
    const auto g = testing::random_bigraph(rng, 6, 7, 0.4);
    EXPECT_EQ(max_matching(g), max_matching(g));
  }
}

TEST(MaxMatching, ValidateRejectsBadMatchings) {
  const auto g = path_graph();
  EXPECT_NO_THROW(validate_matching(g, Matching{{{0, 0}}}));
  EXPECT_THROW(validate_matching(g, Matching{{{0, 0}, {1, 0}}}), InputError);
  EXPECT_THROW(validate_matching(FiniteBigraph(2, 2, {{0, 0}}), Matching{{{1, 1}}}), InputError);
}

TEST(MaxMatching, AgreesWithBruteForce) {
  testing::Rng rng(2024);
  std::uniform_int_distribution<int> size(0, 8);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int k = 0; k < 300; ++k) {
    const auto g = testing::random_bigraph(rng, size(rng), size(rng), density(rng));
    const auto m = max_matching(g);
    validate_matching(g, m);
    ASSERT_EQ(static_cast<int>(m.size()), oracle::max_matching_size(g)) << "case " << k;
  }
}

TEST(HallCheck, SmallCases) {
  EXPECT_FALSE(hall_check(FiniteBigraph(1, 1, {{0, 0}}), Side::kLeft));
  const auto w = hall_check(FiniteBigraph::complete(1, 2), Side::kRight);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->side, Side::kRight);
  EXPECT_EQ(w->subset, (IndexSet{0, 1}));
  EXPECT_EQ(w->neighborhood_size, 1);

  const auto w36 = hall_check(FiniteBigraph::complete(3, 6), Side::kRight);
  ASSERT_TRUE(w36);
  EXPECT_EQ(w36->subset.size(), 6u);
  EXPECT_EQ(w36->neighborhood_size, 3);
  EXPECT_FALSE(hall_check(FiniteBigraph::complete(3, 6), Side::kLeft));
}

TEST(HallCheck, IsolatedVertexIsItsOwnWitness) {
  const FiniteBigraph g(3, 3, {{0, 0}, {1, 1}});
  const auto w = hall_check(g, Side::kLeft);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->deficiency(), 1);
  EXPECT_EQ(static_cast<int>(neighborhood(g, Side::kLeft, w->subset).size()),
            w->neighborhood_size);
}

TEST(HallCheck, WitnessHasMaximumDeficiency) {
  testing::Rng rng(99);
  std::uniform_int_distribution<int> size(1, 7);
  for (int k = 0; k < 300; ++k) {
    const auto g = testing::random_bigraph(rng, size(rng), size(rng), 0.3);
    for (Side side : {Side::kLeft, Side::kRight}) {
      const auto w = hall_check(g, side);
      const int d = oracle::deficiency(g, side);
      if (d == 0) {
        EXPECT_FALSE(w);
        continue;
      }
      ASSERT_TRUE(w);
      EXPECT_EQ(w->deficiency(), d);
      EXPECT_EQ(static_cast<int>(neighborhood(g, side, w->subset).size()), w->neighborhood_size);
    }
  }
}

TEST(HallCheck, RestrictedToActiveVertices) {
  // Left 0 and 1 compete for right 0; left 2 is free.
  const FiniteBigraph g(3, 2, {{0, 0}, {1, 0}, {2, 1}});
  EXPECT_TRUE(hall_check(g, Side::kLeft));
  EXPECT_FALSE(hall_check_restricted(g, Side::kLeft, {true, false, true}));
  const auto w = hall_check_restricted(g, Side::kLeft, {true, true, false});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->subset, (IndexSet{0, 1}));
  EXPECT_EQ(w->neighborhood_size, 1);
  EXPECT_FALSE(hall_check_restricted(g, Side::kLeft, {false, false, false}));
}

TEST(Bottleneck, SmallCases) {
  const FiniteBigraph two(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {1, 2, 2, 3});
  const auto b = bottleneck_matching(two);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->threshold, 2.0);
  EXPECT_EQ(b->matching.pairs, (std::vector<Edge>{{0, 1}, {1, 0}}));

  const auto single = bottleneck_matching(FiniteBigraph(1, 1, {{0, 0}}, {5}));
  ASSERT_TRUE(single);
  EXPECT_EQ(single->threshold, 5.0);

  const auto diagonal = bottleneck_matching(FiniteBigraph(2, 2, {{0, 0}, {1, 1}}, {0, 0}));
  ASSERT_TRUE(diagonal);
  EXPECT_EQ(diagonal->threshold, 0.0);

  EXPECT_FALSE(bottleneck_matching(FiniteBigraph(2, 2, {{0, 0}, {1, 0}}, {1, 1})));
  EXPECT_FALSE(bottleneck_matching(FiniteBigraph(1, 2, {{0, 0}}, {1})));
}

TEST(Bottleneck, ThresholdIsTight) {
  testing::Rng rng(5);
  std::uniform_real_distribution<double> weight(0.0, 10.0);
  int feasible = 0;
  for (int k = 0; k < 100; ++k) {
    const auto base = testing::random_bigraph(rng, 5, 5, 0.6);
    std::vector<Edge> edges(base.edges().begin(), base.edges().end());
    std::vector<double> w;
    for (std::size_t e = 0; e < edges.size(); ++e) w.push_back(std::round(weight(rng)));
    const FiniteBigraph g(5, 5, edges, w);
    const auto b = bottleneck_matching(g);
    if (!b) {
      EXPECT_LT(oracle::max_matching_size(g), 5);
      continue;
    }
    ++feasible;
    EXPECT_EQ(oracle::max_matching_size(g.edges_up_to(b->threshold)), 5);
    EXPECT_LT(oracle::max_matching_size(g.edges_up_to(std::nextafter(b->threshold, -1.0))), 5);
  }
  EXPECT_GT(feasible, 10);
}

}  // namespace
}  // namespace symmatch
