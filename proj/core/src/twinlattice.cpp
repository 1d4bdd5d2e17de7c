#include "symmatch/twinlattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "symmatch/error.hpp"

namespace symmatch {

namespace {

using I64 = std::int64_t;
using IntPoint = std::array<I64, 2>;

I64 floor_div(I64 num, I64 den) {
  I64 q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

// Integer coordinates of the rational plane scaled by `scale`, chosen so that
// both lattices and all of L land on integers.
class ScaledFrame {
 public:
  explicit ScaledFrame(const RationalRotation& rot) : rot_(rot) {
    const I64 den = std::lcm(rot.t[0].denominator(), rot.t[1].denominator());
    scale_ = rot.c * den;
    v1_ = {scale_ * rot.p, scale_ * rot.q};
    v2_ = {-scale_ * rot.q, scale_ * rot.p};
  }

  I64 scale() const { return scale_; }

  IntPoint a_point(I64 x, I64 y) const { return {scale_ * x, scale_ * y}; }

  IntPoint b_point(I64 x, I64 y) const {
    const I64 unit = scale_ / rot_.c;
    const I64 tx = (rot_.t[0] * scale_).numerator();
    const I64 ty = (rot_.t[1] * scale_).numerator();
    return {unit * (rot_.p * x - rot_.q * y) + tx, unit * (rot_.q * x + rot_.p * y) + ty};
  }

  IntPoint translate(const IntPoint& pt, I64 m, I64 n) const {
    return {pt[0] + m * v1_[0] + n * v2_[0], pt[1] + m * v1_[1] + n * v2_[1]};
  }

  // Moves a point into the fundamental domain [0, 1)^2 of L-coordinates.
  IntPoint reduce(const IntPoint& pt) const {
    const I64 den = scale_ * rot_.c * rot_.c;
    const I64 m = floor_div(rot_.p * pt[0] + rot_.q * pt[1], den);
    const I64 n = floor_div(-rot_.q * pt[0] + rot_.p * pt[1], den);
    return translate(pt, -m, -n);
  }

  RationalPoint to_rational(const IntPoint& pt) const {
    return {Ratio(pt[0], scale_), Ratio(pt[1], scale_)};
  }

 private:
  RationalRotation rot_;
  I64 scale_ = 1;
  IntPoint v1_{};
  IntPoint v2_{};
};

I64 squared_norm(const IntPoint& d) { return d[0] * d[0] + d[1] * d[1]; }

double to_double_point(const Ratio& r) { return to_double(r); }

}  // namespace

RationalRotation RationalRotation::make(I64 p, I64 q, I64 c, RationalPoint t) {
  if (c < 1) throw InputError("rotation denominator c must be >= 1");
  if (p * p + q * q != c * c) {
    throw InputError("p^2 + q^2 must equal c^2 for (" + std::to_string(p) + ", " +
                     std::to_string(q) + ", " + std::to_string(c) + ")");
  }
  const I64 g = std::gcd(std::gcd(p, q), c);
  return RationalRotation{p / g, q / g, c / g, t};
}

RationalPoint RationalRotation::apply(I64 x, I64 y) const {
  return {Ratio(p * x - q * y, c) + t[0], Ratio(q * x + p * y, c) + t[1]};
}

Sublattice common_sublattice(const RationalRotation& rot) {
  Sublattice s;
  s.basis = {{{rot.p, rot.q}, {-rot.q, rot.p}}};
  s.index = rot.p * rot.p + rot.q * rot.q;
  // L inside R Z^2: (p, q) = R (c, 0) and (-q, p) = R (0, c), up to the
  // translation t which cancels in differences.
  const auto origin = rot.apply(0, 0);
  const auto e1 = rot.apply(rot.c, 0);
  const auto e2 = rot.apply(0, rot.c);
  if (e1[0] - origin[0] != Ratio(rot.p) || e1[1] - origin[1] != Ratio(rot.q) ||
      e2[0] - origin[0] != Ratio(-rot.q) || e2[1] - origin[1] != Ratio(rot.p)) {
    throw std::logic_error("sublattice is not contained in the rotated lattice");
  }
  if (s.index != rot.c * rot.c) throw std::logic_error("sublattice index differs from c^2");
  return s;
}

double period_cap(const RationalRotation& rot) { return static_cast<double>(rot.c); }

QuotientGraph quotient_graph(const RationalRotation& rot, double r) {
  if (!(r >= 0.0)) throw InputError("threshold must be >= 0");
  if (r >= period_cap(rot)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "threshold %.6f exceeds the single-period cap %.6f", r,
                  period_cap(rot));
    throw InputError(buf);
  }
  const ScaledFrame frame(rot);
  const I64 c = rot.c;
  const I64 c2 = c * c;

  std::set<IntPoint> a_set;
  for (I64 x = 0; x < c2; ++x) {
    for (I64 y = 0; y < c2; ++y) a_set.insert(frame.reduce(frame.a_point(x, y)));
  }
  std::set<IntPoint> b_set;
  for (I64 x = 0; x < c; ++x) {
    for (I64 y = 0; y < c; ++y) b_set.insert(frame.reduce(frame.b_point(x, y)));
  }
  if (static_cast<I64>(a_set.size()) != c2 || static_cast<I64>(b_set.size()) != c2) {
    throw std::logic_error("unexpected number of orbit representatives");
  }
  const std::vector<IntPoint> a_reps(a_set.begin(), a_set.end());
  const std::vector<IntPoint> b_reps(b_set.begin(), b_set.end());

  // Representatives differ by less than one period in each L-coordinate, so
  // translates beyond 2 + r / c periods are farther than r.
  const I64 reach = 2 + static_cast<I64>(std::ceil(r / static_cast<double>(c)));
  const long double limit = static_cast<long double>(r) * r * frame.scale() * frame.scale() *
                            (1.0L + 1e-12L);
  const auto group = GroupDescriptor::zd(2);
  std::vector<Triple> triples;
  std::map<std::tuple<int, I64, I64, int>, I64> dist;
  for (int i = 0; i < static_cast<int>(a_reps.size()); ++i) {
    for (int j = 0; j < static_cast<int>(b_reps.size()); ++j) {
      for (I64 m = -reach; m <= reach; ++m) {
        for (I64 n = -reach; n <= reach; ++n) {
          const auto b = frame.translate(b_reps[j], m, n);
          const I64 d2 = squared_norm({b[0] - a_reps[i][0], b[1] - a_reps[i][1]});
          if (static_cast<long double>(d2) > limit) continue;
          triples.push_back({i, GroupElem::vector({m, n}), j});
          dist[{i, m, n, j}] = d2;
        }
      }
    }
  }
  SymGraph graph(group, static_cast<int>(c2), static_cast<int>(c2), std::move(triples));
  std::vector<Ratio> squared;
  const I64 s2 = frame.scale() * frame.scale();
  for (const auto& t : graph.triples()) {
    squared.emplace_back(dist.at({t.a, t.g.data()[0], t.g.data()[1], t.b}), s2);
  }
  QuotientGraph q{rot, common_sublattice(rot), std::move(graph), std::move(squared), {}, {}};
  for (const auto& pt : a_reps) q.a_reps.push_back(frame.to_rational(pt));
  for (const auto& pt : b_reps) q.b_reps.push_back(frame.to_rational(pt));
  return q;
}

std::variant<BottleneckBound, BottleneckInfeasible> bottleneck_bound(const RationalRotation& rot,
                                                                     double r_cap) {
  auto q = quotient_graph(rot, r_cap);
  // Each factor edge is usable from the smallest distance among its triples.
  std::map<OrbitPair, Ratio> edge_min;
  for (std::size_t k = 0; k < q.graph.triples().size(); ++k) {
    const auto& t = q.graph.triples()[k];
    auto [it, fresh] = edge_min.emplace(OrbitPair{t.a, t.b}, q.squared_distance[k]);
    if (!fresh && q.squared_distance[k] < it->second) it->second = q.squared_distance[k];
  }
  std::vector<Ratio> distinct;
  for (const auto& [key, d] : edge_min) distinct.push_back(d);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.empty()) return BottleneckInfeasible{};

  // Weights are ranks into `distinct`, so the threshold search stays exact.
  std::vector<Edge> edges;
  std::vector<double> ranks;
  for (const auto& [key, d] : edge_min) {
    edges.push_back({key.first, key.second});
    ranks.push_back(static_cast<double>(
        std::lower_bound(distinct.begin(), distinct.end(), d) - distinct.begin()));
  }
  const FiniteBigraph weighted(q.graph.a_orbits(), q.graph.b_orbits(), std::move(edges),
                               std::move(ranks));
  const auto result = bottleneck_matching(weighted);
  if (!result) return BottleneckInfeasible{distinct.back()};

  const Ratio squared = distinct[static_cast<std::size_t>(result->threshold)];
  LiftChoice choice;
  for (const auto& e : result->matching.pairs) {
    for (std::size_t k = 0; k < q.graph.triples().size(); ++k) {
      const auto& t = q.graph.triples()[k];
      if (t.a == e.left && t.b == e.right && q.squared_distance[k] <= squared) {
        choice.emplace(OrbitPair{t.a, t.b}, t.g);
        break;
      }
    }
  }
  auto matching = lift(q.graph, result->matching, choice);
  const double value = std::sqrt(to_double(squared));
  return BottleneckBound{squared, value, std::move(matching), std::move(q)};
}

std::vector<PointPair> matching_points(const BottleneckBound& b, int periods) {
  const auto& basis = b.quotient.lattice.basis;
  const auto shift = [&](const RationalPoint& pt, I64 m, I64 n) -> std::array<double, 2> {
    return {to_double_point(pt[0]) + static_cast<double>(m * basis[0][0] + n * basis[1][0]),
            to_double_point(pt[1]) + static_cast<double>(m * basis[0][1] + n * basis[1][1])};
  };
  std::vector<PointPair> out;
  for (I64 m = -periods; m <= periods; ++m) {
    for (I64 n = -periods; n <= periods; ++n) {
      for (const auto& [key, g] : b.matching.chosen) {
        out.push_back({shift(b.quotient.a_reps[key.first], m, n),
                       shift(b.quotient.b_reps[key.second], m + g.data()[0], n + g.data()[1])});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PointPair& x, const PointPair& y) {
    return std::tie(x.from, x.to) < std::tie(y.from, y.to);
  });
  return out;
}

std::string format_point_pairs(const std::vector<PointPair>& pairs) {
  std::string out;
  char line[128];
  for (const auto& p : pairs) {
    // Adding 0.0 turns -0.0 into 0.0 so the text is stable.
    std::snprintf(line, sizeof line, "%.6f %.6f -> %.6f %.6f\n", p.from[0] + 0.0,
                  p.from[1] + 0.0, p.to[0] + 0.0, p.to[1] + 0.0);
    out += line;
  }
  return out;
}

namespace {

struct DistancePair {
  double distance;
  int a;
  int b;
};

}  // namespace

IrrationalEstimate irrational_window_estimate(double angle, std::array<double, 2> t,
                                              int window_radius, double r_max) {
  if (window_radius < 1) throw InputError("window radius must be >= 1");
  if (!(r_max > 0.0)) throw InputError("r_max must be > 0");
  const double radius = window_radius;
  const double cs = std::cos(angle);
  const double sn = std::sin(angle);

  std::vector<std::array<double, 2>> a_pts;
  std::map<std::pair<I64, I64>, int> a_index;
  for (I64 x = -window_radius; x <= window_radius; ++x) {
    for (I64 y = -window_radius; y <= window_radius; ++y) {
      if (x * x + y * y > static_cast<I64>(window_radius) * window_radius) continue;
      a_index[{x, y}] = static_cast<int>(a_pts.size());
      a_pts.push_back({static_cast<double>(x), static_cast<double>(y)});
    }
  }
  std::vector<std::array<double, 2>> b_pts;
  const I64 reach = window_radius + static_cast<I64>(std::ceil(std::hypot(t[0], t[1]))) + 2;
  for (I64 x = -reach; x <= reach; ++x) {
    for (I64 y = -reach; y <= reach; ++y) {
      const double px = cs * x - sn * y + t[0];
      const double py = sn * x + cs * y + t[1];
      if (std::hypot(px, py) <= radius + kIrrationalTolerance) b_pts.push_back({px, py});
    }
  }

  std::vector<DistancePair> pairs;
  for (int j = 0; j < static_cast<int>(b_pts.size()); ++j) {
    const auto& p = b_pts[j];
    for (I64 x = static_cast<I64>(std::floor(p[0] - r_max));
         x <= static_cast<I64>(std::ceil(p[0] + r_max)); ++x) {
      for (I64 y = static_cast<I64>(std::floor(p[1] - r_max));
           y <= static_cast<I64>(std::ceil(p[1] + r_max)); ++y) {
        auto it = a_index.find({x, y});
        if (it == a_index.end()) continue;
        const double d = std::hypot(p[0] - static_cast<double>(x), p[1] - static_cast<double>(y));
        if (d <= r_max + kIrrationalTolerance) pairs.push_back({d, it->second, j});
      }
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const DistancePair& x, const DistancePair& y) {
    return std::tie(x.distance, x.a, x.b) < std::tie(y.distance, y.a, y.b);
  });

  std::vector<double> candidates{0.0};
  for (const auto& p : pairs) {
    if (p.distance > candidates.back() + kIrrationalTolerance) candidates.push_back(p.distance);
  }

  // Vertices whose whole r-neighborhood lies in the disc, with a safety margin
  // so that rounding can only shrink the interior.
  constexpr double kMargin = 1e-6;
  const auto violation_at = [&](double r) {
    std::vector<Edge> edges;
    for (const auto& p : pairs) {
      if (p.distance > r + kIrrationalTolerance) break;
      edges.push_back({p.a, p.b});
    }
    const FiniteBigraph g(static_cast<int>(a_pts.size()), static_cast<int>(b_pts.size()),
                          std::move(edges));
    std::vector<bool> a_in(a_pts.size());
    std::vector<bool> b_in(b_pts.size());
    for (std::size_t k = 0; k < a_pts.size(); ++k) {
      a_in[k] = std::hypot(a_pts[k][0], a_pts[k][1]) + r + kMargin <= radius;
    }
    for (std::size_t k = 0; k < b_pts.size(); ++k) {
      b_in[k] = std::hypot(b_pts[k][0], b_pts[k][1]) + r + kMargin <= radius;
    }
    return hall_check_restricted(g, Side::kLeft, a_in).has_value() ||
           hall_check_restricted(g, Side::kRight, b_in).has_value();
  };

  IrrationalEstimate est;
  est.angle = angle;
  est.t = t;
  est.window_radius = window_radius;
  est.left_points = static_cast<int>(a_pts.size());
  est.right_points = static_cast<int>(b_pts.size());
  est.candidates = candidates.size();

  // Violations are monotone in r: shrinking r removes edges and only enlarges
  // the interior. Find the last candidate with a violation.
  std::size_t lo = 0;
  std::size_t hi = candidates.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (violation_at(candidates[mid])) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo > 0) {
    est.violation_found = true;
    est.lower_bound = candidates[lo - 1];
  }
  if (lo < candidates.size()) est.matching_at = candidates[lo];
  return est;
}

}  // namespace symmatch
