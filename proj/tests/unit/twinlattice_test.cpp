#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "oracles.hpp"
#include "symmatch/error.hpp"
#include "symmatch/twinlattice.hpp"

namespace symmatch {
namespace {

const RationalPoint kZero{Ratio(0), Ratio(0)};
const RationalPoint kHalf{Ratio(1, 2), Ratio(1, 2)};

// Points of R Z^2 within distance 1 of (k, 0), summed over k = 0..24, which
// represent Z^2 / L for the (3, 4, 5) rotation. Pure integer arithmetic.
int count_pairs_345_within_one() {
  int total = 0;
  for (int k = 0; k < 25; ++k) {
    for (int m = -40; m <= 40; ++m) {
      for (int n = -40; n <= 40; ++n) {
        const long dx = 3L * m - 4L * n - 5L * k;
        const long dy = 4L * m + 3L * n;
        if (dx * dx + dy * dy <= 25) ++total;
      }
    }
  }
  return total;
}

TEST(Rotation, Normalization) {
  const auto r = RationalRotation::make(6, 8, 10);
  EXPECT_EQ(r.p, 3);
  EXPECT_EQ(r.q, 4);
  EXPECT_EQ(r.c, 5);
  EXPECT_THROW(RationalRotation::make(3, 4, 6), InputError);
  EXPECT_THROW(RationalRotation::make(0, 0, 0), InputError);
  const auto image = r.apply(1, 0);
  EXPECT_EQ(image[0], Ratio(3, 5));
  EXPECT_EQ(image[1], Ratio(4, 5));
}

TEST(Sublattice, Examples) {
  const auto id = common_sublattice(RationalRotation::identity());
  EXPECT_EQ(id.index, 1);
  const auto l345 = common_sublattice(RationalRotation::make(3, 4, 5));
  EXPECT_EQ(l345.index, 25);
  EXPECT_EQ(l345.basis[0], (std::array<std::int64_t, 2>{3, 4}));
  EXPECT_EQ(l345.basis[1], (std::array<std::int64_t, 2>{-4, 3}));
  EXPECT_EQ(common_sublattice(RationalRotation::make(5, 12, 13)).index, 169);
  EXPECT_EQ(period_cap(RationalRotation::make(5, 12, 13)), 13.0);
}

TEST(Quotient, IdentityRotation) {
  const auto q0 = quotient_graph(RationalRotation::identity(), 0.0);
  EXPECT_EQ(q0.graph.a_orbits(), 1);
  EXPECT_EQ(q0.graph.b_orbits(), 1);
  ASSERT_EQ(q0.graph.triples().size(), 1u);
  EXPECT_EQ(q0.squared_distance[0], Ratio(0));

  const auto qh = quotient_graph(RationalRotation::identity(kHalf), 0.71);
  ASSERT_EQ(qh.graph.triples().size(), 4u);
  for (const auto& d : qh.squared_distance) EXPECT_EQ(d, Ratio(1, 2));
  const auto below = quotient_graph(RationalRotation::identity(kHalf), 0.7);
  EXPECT_EQ(below.graph.triples().size(), 0u);
}

TEST(Quotient, RotationCounts) {
  const auto q = quotient_graph(RationalRotation::make(3, 4, 5), 1.0);
  EXPECT_EQ(q.graph.a_orbits(), 25);
  EXPECT_EQ(q.graph.b_orbits(), 25);
  EXPECT_EQ(static_cast<int>(q.graph.triples().size()), count_pairs_345_within_one());
  for (const auto& d : q.squared_distance) EXPECT_LE(d, Ratio(1));
}

TEST(Quotient, RejectsRadiusOutsideOnePeriod) {
  EXPECT_THROW(quotient_graph(RationalRotation::identity(), -0.5), InputError);
  EXPECT_THROW(quotient_graph(RationalRotation::identity(), 1.0), InputError);
  EXPECT_THROW(quotient_graph(RationalRotation::make(3, 4, 5), 5.0), InputError);
}

TEST(Bottleneck, TrivialRotations) {
  const auto b0 = bottleneck_bound(RationalRotation::identity(), 0.9);
  ASSERT_TRUE(std::holds_alternative<BottleneckBound>(b0));
  EXPECT_EQ(std::get<BottleneckBound>(b0).squared, Ratio(0));

  const auto bh = bottleneck_bound(RationalRotation::identity(kHalf), 0.9);
  ASSERT_TRUE(std::holds_alternative<BottleneckBound>(bh));
  EXPECT_EQ(std::get<BottleneckBound>(bh).squared, Ratio(1, 2));
  EXPECT_NEAR(std::get<BottleneckBound>(bh).value, std::sqrt(0.5), 1e-12);

  const auto inf = bottleneck_bound(RationalRotation::identity(kHalf), 0.5);
  ASSERT_TRUE(std::holds_alternative<BottleneckInfeasible>(inf));
}

TEST(Bottleneck, MatchesTorusOracle) {
  const std::vector<RationalRotation> rotations{
      RationalRotation::make(3, 4, 5),
      RationalRotation::make(4, 3, 5),
      RationalRotation::make(3, 4, 5, {Ratio(1, 2), Ratio(0)}),
      RationalRotation::make(3, -4, 5, {Ratio(1, 3), Ratio(1, 4)}),
      RationalRotation::make(0, 1, 1, {Ratio(1, 5), Ratio(2, 5)}),
  };
  for (const auto& rot : rotations) {
    const auto b = bottleneck_bound(rot, std::min(1.9, 0.99 * period_cap(rot)));
    ASSERT_TRUE(std::holds_alternative<BottleneckBound>(b));
    EXPECT_EQ(std::get<BottleneckBound>(b).squared, oracle::torus_bottleneck_squared(rot))
        << rot.p << " " << rot.q << " " << rot.c;
  }
}

TEST(Bottleneck, PinnedValues) {
  // Computed once by the torus oracle and frozen.
  const auto b345 = bottleneck_bound(RationalRotation::make(3, 4, 5), 1.9);
  EXPECT_EQ(std::get<BottleneckBound>(b345).squared, Ratio(1, 5));
  const auto b51213 = bottleneck_bound(RationalRotation::make(5, 12, 13), 1.9);
  EXPECT_EQ(std::get<BottleneckBound>(b51213).squared, Ratio(4, 13));
}

TEST(Bottleneck, LiftedMatchingIsABijectionOnPeriods) {
  const auto rot = RationalRotation::make(3, 4, 5);
  const auto b = std::get<BottleneckBound>(bottleneck_bound(rot, 1.9));
  EXPECT_EQ(b.matching.chosen.size(), 25u);
  const auto pairs = matching_points(b, 1);
  EXPECT_EQ(pairs.size(), 9u * 25u);
  std::set<std::pair<long, long>> sources;
  std::set<std::pair<long, long>> targets;
  for (const auto& p : pairs) {
    const double dx = p.to[0] - p.from[0];
    const double dy = p.to[1] - p.from[1];
    EXPECT_LE(dx * dx + dy * dy, b.value * b.value + 1e-9);
    EXPECT_NEAR(p.from[0], std::round(p.from[0]), 1e-9);
    sources.insert({std::lround(p.from[0] * 1000), std::lround(p.from[1] * 1000)});
    targets.insert({std::lround(p.to[0] * 1000), std::lround(p.to[1] * 1000)});
  }
  EXPECT_EQ(sources.size(), pairs.size());
  EXPECT_EQ(targets.size(), pairs.size());
  const auto text = format_point_pairs({{{0.0, 0.0}, {0.6, -0.8}}});
  EXPECT_EQ(text, "0.000000 0.000000 -> 0.600000 -0.800000\n");
}

TEST(Irrational, IdentityIsZero) {
  const auto est = irrational_window_estimate(0.0, {0.0, 0.0}, 5);
  EXPECT_FALSE(est.violation_found);
  EXPECT_EQ(est.lower_bound, 0.0);
  ASSERT_TRUE(est.matching_at);
  EXPECT_EQ(*est.matching_at, 0.0);
}

TEST(Irrational, QuarterTurnLowerBounds) {
  const double angle = std::numbers::pi / 4;
  double previous = 0.0;
  for (int r : {2, 4, 8, 12}) {
    const auto est = irrational_window_estimate(angle, {0.0, 0.0}, r);
    EXPECT_GE(est.lower_bound, previous - kIrrationalTolerance) << r;
    EXPECT_LE(est.lower_bound, 0.8558);
    if (est.matching_at) EXPECT_GE(*est.matching_at, est.lower_bound);
    previous = est.lower_bound;
  }
  EXPECT_THROW(irrational_window_estimate(angle, {0.0, 0.0}, 0), InputError);
}

}  // namespace
}  // namespace symmatch
