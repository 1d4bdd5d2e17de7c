#pragma once

// Bounded-displacement bijections between Z^2 and a rotated, translated copy
// R Z^2 + t, viewed as perfect matchings of the bipartite distance graph.
//
// Rational mode: R = (1/c) [[p, -q], [q, p]] with p^2 + q^2 = c^2. The
// sublattice L spanned by (p, q) and (-q, p) lies in Z^2 and equals R (c Z^2),
// so translations by L preserve both point sets and the distance graph is a
// Z^2-symmetric graph with c^2 orbits per side (group coordinates are taken
// with respect to the L-basis). All distances are exact squared rationals.
//
// Irrational mode: arbitrary angle, floating point with threshold tolerance
// kIrrationalTolerance, finite discs only.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symmatch/ratio.hpp"
#include "symmatch/symmetry.hpp"

namespace symmatch {

inline constexpr double kIrrationalTolerance = 1e-9;

using RationalPoint = std::array<Ratio, 2>;

struct RationalRotation {
  std::int64_t p = 1;
  std::int64_t q = 0;
  std::int64_t c = 1;
  RationalPoint t{Ratio(0), Ratio(0)};

  // Divides out gcd(p, q, c); throws InputError unless p^2 + q^2 = c^2, c >= 1.
  static RationalRotation make(std::int64_t p, std::int64_t q, std::int64_t c,
                               RationalPoint t = {Ratio(0), Ratio(0)});
  static RationalRotation identity(RationalPoint t = {Ratio(0), Ratio(0)}) {
    return make(1, 0, 1, t);
  }

  RationalPoint apply(std::int64_t x, std::int64_t y) const;  // R (x, y) + t
};

struct Sublattice {
  std::array<std::array<std::int64_t, 2>, 2> basis;  // rows are basis vectors
  std::int64_t index = 0;                            // [Z^2 : L]
};

// Basis (p, q), (-q, p); throws std::logic_error if a containment check fails.
Sublattice common_sublattice(const RationalRotation& rot);

// One period: largest admissible threshold is the period length c.
double period_cap(const RationalRotation& rot);

struct QuotientGraph {
  RationalRotation rotation;
  Sublattice lattice;
  SymGraph graph;                         // group zd(2) in L-coordinates
  std::vector<Ratio> squared_distance;    // aligned with graph.triples()
  std::vector<RationalPoint> a_reps;      // fundamental-domain representatives
  std::vector<RationalPoint> b_reps;
};

// All pairs at Euclidean distance <= r between the two lattices, as a
// Z^2-symmetric graph. Throws InputError if r < 0 or r >= period_cap.
QuotientGraph quotient_graph(const RationalRotation& rot, double r);

struct BottleneckBound {
  Ratio squared;  // (r*)^2, exact
  double value = 0.0;
  SymMatching matching;
  QuotientGraph quotient;
};

struct BottleneckInfeasible {
  std::optional<Ratio> largest_squared;  // largest candidate tested
};

std::variant<BottleneckBound, BottleneckInfeasible> bottleneck_bound(const RationalRotation& rot,
                                                                     double r_cap);

struct PointPair {
  std::array<double, 2> from;
  std::array<double, 2> to;
};

// The symmetric matching realized on the periods h in [-periods, periods]^2,
// sorted by source point.
std::vector<PointPair> matching_points(const BottleneckBound& b, int periods);
// "x y -> x' y'" with six decimals, one pair per line.
std::string format_point_pairs(const std::vector<PointPair>& pairs);

struct IrrationalEstimate {
  double angle = 0.0;
  std::array<double, 2> t{0.0, 0.0};
  int window_radius = 0;
  int left_points = 0;
  int right_points = 0;
  std::size_t candidates = 0;
  // Largest candidate r with an interior Hall violation: a certified lower
  // bound for the infinite problem. 0 when no candidate has a violation.
  double lower_bound = 0.0;
  bool violation_found = false;
  // Smallest candidate at which the window's interior can be matched. Only
  // an indication for the infinite problem, not a certificate.
  std::optional<double> matching_at;
};

IrrationalEstimate irrational_window_estimate(double angle, std::array<double, 2> t,
                                              int window_radius, double r_max = 1.25);

}  // namespace symmatch
