#include "symmatch/symmetry.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <unordered_set>

#include "symmatch/error.hpp"

namespace symmatch {

namespace {

struct LabelHash {
  std::size_t operator()(const std::pair<GroupElem, int>& v) const {
    return GroupElemHash{}(v.first) * 31u + static_cast<std::size_t>(v.second);
  }
};

constexpr int kMaxProbeOrbits = 16;

}  // namespace

SymGraph::SymGraph(GroupDescriptor group, int a_orbits, int b_orbits,
                   std::vector<Triple> triples)
    : group_(group), a_orbits_(a_orbits), b_orbits_(b_orbits) {
  group_.validate();
  if (a_orbits < 0 || b_orbits < 0) throw InputError("orbit counts must be >= 0");
  std::vector<std::tuple<int, std::string, int, std::size_t>> keyed;
  keyed.reserve(triples.size());
  for (std::size_t k = 0; k < triples.size(); ++k) {
    const auto& t = triples[k];
    if (t.a < 0 || t.a >= a_orbits || t.b < 0 || t.b >= b_orbits) {
      throw InputError("triple orbit index out of bounds: (" + std::to_string(t.a) + ", " +
                       t.g.to_string() + ", " + std::to_string(t.b) + ")");
    }
    if (!(t.g.group() == group_)) {
      throw InputError("triple element " + t.g.to_string() + " is not in the graph's group");
    }
    keyed.emplace_back(t.a, t.g.to_string(), t.b, k);
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t k = 0; k < keyed.size(); ++k) {
    const auto& [a, g, b, index] = keyed[k];
    if (k > 0 && std::get<0>(keyed[k - 1]) == a && std::get<1>(keyed[k - 1]) == g &&
        std::get<2>(keyed[k - 1]) == b) {
      throw InputError("duplicate triple (" + std::to_string(a) + ", " + g + ", " +
                       std::to_string(b) + ")");
    }
    triples_.push_back(std::move(triples[index]));
  }
}

std::vector<std::pair<GroupElem, int>> SymGraph::offsets(Side side, int orbit) const {
  std::vector<std::pair<GroupElem, int>> out;
  for (const auto& t : triples_) {
    if (side == Side::kLeft && t.a == orbit) out.emplace_back(t.g, t.b);
    if (side == Side::kRight && t.b == orbit) out.emplace_back(inverse(t.g), t.a);
  }
  return out;
}

FactorGraph factor(const SymGraph& sg) {
  FactorGraph out;
  for (const auto& t : sg.triples()) out.multiplicity[{t.a, t.b}].push_back(t.g);
  std::vector<Edge> edges;
  for (auto& [pair, list] : out.multiplicity) {
    std::sort(list.begin(), list.end(), SerializedLess{});
    edges.push_back({pair.first, pair.second});
  }
  out.underlying = FiniteBigraph(sg.a_orbits(), sg.b_orbits(), std::move(edges));
  return out;
}

bool is_proper(const SymGraph& sg) {
  const auto f = factor(sg);
  return std::all_of(f.multiplicity.begin(), f.multiplicity.end(),
                     [](const auto& entry) { return entry.second.size() == 1; });
}

int WindowGraph::interior_count(Side s) const {
  const auto& mask = s == Side::kLeft ? left_interior : right_interior;
  return static_cast<int>(std::count(mask.begin(), mask.end(), true));
}

WindowGraph materialize(const SymGraph& sg, const FiniteSubset& window) {
  if (!(window.group() == sg.group())) throw InputError("window group mismatch");
  const int na = sg.a_orbits();
  const int nb = sg.b_orbits();
  const auto n = static_cast<int>(window.size());
  WindowGraph w{window, {}, {}, {}, {}, {}, na, nb};
  w.left.reserve(static_cast<std::size_t>(n) * na);
  w.right.reserve(static_cast<std::size_t>(n) * nb);
  for (const auto& h : window.elements()) {
    for (int i = 0; i < na; ++i) w.left.push_back({h, i});
  }
  for (const auto& h : window.elements()) {
    for (int j = 0; j < nb; ++j) w.right.push_back({h, j});
  }
  w.left_interior.assign(w.left.size(), true);
  w.right_interior.assign(w.right.size(), true);

  std::vector<Edge> edges;
  for (int p = 0; p < n; ++p) {
    const auto& h = window.elements()[p];
    for (const auto& t : sg.triples()) {
      const auto q = window.index_of(compose(h, t.g));
      if (q < 0) {
        w.left_interior[p * na + t.a] = false;
        continue;
      }
      edges.push_back({p * na + t.a, static_cast<int>(q) * nb + t.b});
    }
    // Right vertex (h, j) has neighbors (h g^-1, i).
    for (const auto& t : sg.triples()) {
      if (window.index_of(compose(h, inverse(t.g))) < 0) w.right_interior[p * nb + t.b] = false;
    }
  }
  w.graph = FiniteBigraph(n * na, n * nb, std::move(edges));
  return w;
}

std::optional<std::pair<VertexLabel, VertexLabel>> find_improper_pair(
    const SymGraph& sg, const FiniteSubset& window) {
  const auto w = materialize(sg, window);
  for (int y = 0; y < w.graph.right_count(); ++y) {
    const auto nbrs = w.graph.adjacent(Side::kRight, y);
    for (std::size_t s = 0; s < nbrs.size(); ++s) {
      for (std::size_t t = s + 1; t < nbrs.size(); ++t) {
        const auto& x1 = w.left[nbrs[s]];
        const auto& x2 = w.left[nbrs[t]];
        // Same orbit and distinct vertices: x2 = (h2 h1^-1) x1 with h2 != h1.
        if (x1.orbit == x2.orbit) return std::make_pair(x1, x2);
      }
    }
  }
  return std::nullopt;
}

SymMatching lift(const SymGraph& sg, const Matching& factor_matching, const LiftChoice& choice) {
  const auto f = factor(sg);
  validate_matching(f.underlying, factor_matching);
  SymMatching out;
  for (const auto& e : factor_matching.pairs) {
    const OrbitPair key{e.left, e.right};
    const auto& list = f.multiplicity.at(key);
    auto it = choice.find(key);
    if (it == choice.end()) {
      out.chosen.emplace(key, list.front());
      continue;
    }
    if (std::find(list.begin(), list.end(), it->second) == list.end()) {
      throw InputError("lift choice " + it->second.to_string() + " is not a triple on (" +
                       std::to_string(e.left) + ", " + std::to_string(e.right) + ")");
    }
    out.chosen.emplace(key, it->second);
  }
  for (const auto& [key, g] : choice) {
    if (!out.chosen.contains(key)) {
      throw InputError("lift choice given for unmatched factor edge (" +
                       std::to_string(key.first) + ", " + std::to_string(key.second) + ")");
    }
  }
  return out;
}

Matching project(const SymMatching& sm) {
  Matching m;
  for (const auto& [key, g] : sm.chosen) m.pairs.push_back({key.first, key.second});
  return m;
}

Matching restrict_to_window(const SymMatching& sm, const WindowGraph& w) {
  const int na = w.a_orbits;
  const int nb = w.b_orbits;
  Matching m;
  for (int p = 0; p < static_cast<int>(w.window.size()); ++p) {
    const auto& h = w.window.elements()[p];
    for (const auto& [key, g] : sm.chosen) {
      const auto q = w.window.index_of(compose(h, g));
      if (q >= 0) m.pairs.push_back({p * na + key.first, static_cast<int>(q) * nb + key.second});
    }
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

bool covers_interior(const WindowGraph& w, const Matching& m) {
  std::vector<bool> left_hit(w.left.size(), false);
  std::vector<bool> right_hit(w.right.size(), false);
  for (const auto& e : m.pairs) {
    left_hit[e.left] = true;
    right_hit[e.right] = true;
  }
  for (std::size_t v = 0; v < left_hit.size(); ++v) {
    if (w.left_interior[v] && !left_hit[v]) return false;
  }
  for (std::size_t v = 0; v < right_hit.size(); ++v) {
    if (w.right_interior[v] && !right_hit[v]) return false;
  }
  return true;
}

bool has_empty_interior_orbit(const WindowGraph& w) {
  const auto check = [](const std::vector<VertexLabel>& labels, const std::vector<bool>& mask,
                         int orbits) {
    std::vector<bool> seen(orbits, false);
    for (std::size_t v = 0; v < labels.size(); ++v) {
      if (mask[v]) seen[labels[v].orbit] = true;
    }
    return std::find(seen.begin(), seen.end(), false) != seen.end();
  };
  return check(w.left, w.left_interior, w.a_orbits) ||
         check(w.right, w.right_interior, w.b_orbits);
}

std::variant<SymMatching, HallWitness> symmetric_perfect_matching(const SymGraph& sg) {
  const auto f = factor(sg);
  const auto m = max_matching(f.underlying);
  if (is_perfect(f.underlying, m)) return lift(sg, m);
  if (auto w = hall_check(f.underlying, Side::kLeft)) return *w;
  // Left Hall holds, so the deficiency is on the right.
  return *hall_check(f.underlying, Side::kRight);
}

std::optional<HallWitness> interior_hall_violation(const WindowGraph& w, Side side) {
  return hall_check_restricted(w.graph, side,
                               side == Side::kLeft ? w.left_interior : w.right_interior);
}

bool ProbeReport::any_violation() const {
  return std::any_of(windows.begin(), windows.end(),
                     [](const WindowHallRow& r) { return r.violation.has_value(); });
}

ProbeReport window_hall_probe(const SymGraph& sg, const std::vector<FiniteSubset>& windows,
                              Side side) {
  const int orbits = sg.orbits(side);
  if (orbits > kMaxProbeOrbits) {
    throw InputError("window probe supports at most 16 orbits per side");
  }
  if (windows.empty()) throw InputError("window probe needs at least one window");
  std::vector<std::vector<std::pair<GroupElem, int>>> offsets(orbits);
  for (int i = 0; i < orbits; ++i) offsets[i] = sg.offsets(side, i);

  ProbeReport report;
  report.side = side;
  for (std::size_t wi = 0; wi < windows.size(); ++wi) {
    const auto& window = windows[wi];
    if (window.empty()) throw InputError("probe windows must be non-empty");
    const auto w = materialize(sg, window);
    report.windows.push_back({wi, static_cast<std::int64_t>(window.size()),
                              w.interior_count(side), interior_hall_violation(w, side)});

    for (std::uint32_t mask = 1; mask < (1u << orbits); ++mask) {
      ProbeRow row;
      row.window = wi;
      std::vector<GroupElem> u;
      std::vector<bool> in_y(sg.orbits(opposite(side)), false);
      for (int i = 0; i < orbits; ++i) {
        if (!(mask & (1u << i))) continue;
        row.orbits.push_back(i);
        for (const auto& [g, j] : offsets[i]) {
          u.push_back(g);
          in_y[j] = true;
        }
      }
      const FiniteSubset u_set(sg.group(), std::move(u));
      row.f = static_cast<std::int64_t>(window.size());
      row.x = static_cast<std::int64_t>(row.orbits.size());
      row.y = std::count(in_y.begin(), in_y.end(), true);
      row.fu = u_set.empty() ? 0 : static_cast<std::int64_t>(product_set(window, u_set).size());

      std::unordered_set<std::pair<GroupElem, int>, LabelHash> efx;
      for (const auto& h : window.elements()) {
        for (int i : row.orbits) {
          for (const auto& [g, j] : offsets[i]) efx.emplace(compose(h, g), j);
        }
      }
      row.efx = static_cast<std::int64_t>(efx.size());
      row.ratio = Ratio(row.fu, row.f);
      row.counting_holds = row.f * row.x <= row.fu * row.y;
      row.certifies = row.fu * row.y < row.f * (row.y + 1);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace symmatch
