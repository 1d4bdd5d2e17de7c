#include "symmatch/counterexample.hpp"

#include <algorithm>
#include <string>

#include "symmatch/error.hpp"

namespace symmatch {

LatinSquare::LatinSquare(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  if (!is_latin()) throw InputError("table is not a Latin square");
}

LatinSquare LatinSquare::cyclic(int order) {
  if (order < 1) throw InputError("Latin square order must be >= 1");
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int g = 0; g < order; ++g) {
    for (int h = 0; h < order; ++h) table[g][h] = (g + h) % order;
  }
  return LatinSquare(std::move(table));
}

LatinSquare LatinSquare::unchecked(std::vector<std::vector<int>> table) {
  LatinSquare s;
  s.table_ = std::move(table);
  return s;
}

bool LatinSquare::is_latin() const {
  const int n = order();
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(table_[r].size()) != n) return false;
    std::vector<bool> row(n, false);
    std::vector<bool> col(n, false);
    for (int c = 0; c < n; ++c) {
      const int v = table_[r][c];
      const int w = table_[c][r];
      if (v < 0 || v >= n || w < 0 || w >= n || row[v] || col[w]) return false;
      row[v] = true;
      col[w] = true;
    }
  }
  return true;
}

CounterexampleBundle build_counterexample(const ParadoxDecomp& p, const LatinSquare& phi) {
  const auto index = p.index_set();
  const int n = static_cast<int>(index.size());
  if (phi.order() != n) {
    throw InputError("Latin square order " + std::to_string(phi.order()) +
                     " does not match |F| = " + std::to_string(n));
  }
  std::vector<Triple> triples;
  for (int g = 0; g < n; ++g) {
    const auto g_inv = inverse(index.elements()[g]);
    for (int h = 0; h < n; ++h) {
      for (int copy = 1; copy <= 2; ++copy) {
        triples.push_back({phi(g, h), g_inv, CounterexampleBundle::b_orbit(h, copy)});
      }
    }
  }
  return CounterexampleBundle{SymGraph(p.group, n, 2 * n, std::move(triples)), p, phi, index};
}

SymGraph build_untwisted_counterexample(const ParadoxDecomp& p) {
  const auto index = p.index_set();
  std::vector<Triple> triples;
  for (const auto& g : index.elements()) {
    for (int copy = 0; copy < 2; ++copy) triples.push_back({0, inverse(g), copy});
  }
  return SymGraph(p.group, 1, 2, std::move(triples));
}

Matching explicit_matching(const CounterexampleBundle& b, const WindowGraph& w) {
  const int n = b.index_count();
  const auto& window = w.window;
  Matching m;
  for (int p = 0; p < static_cast<int>(window.size()); ++p) {
    const auto& x = window.elements()[p];
    for (int copy = 1; copy <= 2; ++copy) {
      const auto g = copy == 1 ? b.decomposition.classify_a(x) : b.decomposition.classify_b(x);
      const auto gi = static_cast<int>(b.index_set.index_of(g));
      const auto q = window.index_of(compose(x, g));
      if (q < 0) continue;
      for (int h = 0; h < n; ++h) {
        m.pairs.push_back({static_cast<int>(q) * n + b.phi(gi, h),
                           p * 2 * n + CounterexampleBundle::b_orbit(h, copy)});
      }
    }
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

HallWitness certify_no_symmetric_matching(const CounterexampleBundle& b) {
  const auto f = factor(b.sym_graph);
  auto witness = hall_check(f.underlying, Side::kRight);
  if (!witness) throw std::logic_error("counterexample factor satisfies right Hall");
  return *witness;
}

WindowVerification verify_window(const CounterexampleBundle& b, int radius) {
  const auto w = materialize(b.sym_graph, ball(b.sym_graph.group(), radius));
  WindowVerification v;
  v.radius = radius;
  v.left = w.graph.left_count();
  v.right = w.graph.right_count();
  v.interior_left = w.interior_count(Side::kLeft);
  v.interior_right = w.interior_count(Side::kRight);
  const auto m = explicit_matching(b, w);
  v.matched = static_cast<int>(m.size());

  std::vector<int> left_hits(v.left, 0);
  std::vector<int> right_hits(v.right, 0);
  v.valid_matching = true;
  for (const auto& e : m.pairs) {
    if (!w.graph.has_edge(e.left, e.right)) v.valid_matching = false;
    ++left_hits[e.left];
    ++right_hits[e.right];
  }
  for (int x = 0; x < v.left; ++x) {
    if (left_hits[x] > 1) ++v.doubly_covered;
    if (w.left_interior[x] && left_hits[x] == 0) ++v.uncovered_interior;
  }
  for (int y = 0; y < v.right; ++y) {
    if (right_hits[y] > 1) ++v.doubly_covered;
    if (w.right_interior[y] && right_hits[y] == 0) ++v.uncovered_interior;
  }
  if (v.doubly_covered > 0) v.valid_matching = false;
  return v;
}

}  // namespace symmatch
