#pragma once

// The proper F_2-symmetric bipartite graph that has a perfect matching but
// no symmetric one, built from a paradoxical decomposition and a Latin
// square on its index set F.
//
// Coordinates: A = G x F and B = G x F x {1, 2}. Indices of F follow the
// canonical order of the decomposition's index set. A-orbit k is the copy
// coordinate k; B-orbit 2*h + (i - 1) is the pair (h, i).
//
// The edge family ((x g, phi(g, h)), (x, h, i)) for x in G is written in
// triple form by substituting y = x g: the A-vertex (y, phi(g, h)) is joined
// to the B-vertex (y g^-1, (h, i)), giving the triple
//   (phi(g, h), g^-1, 2*h + i - 1).

#include <vector>

#include "symmatch/amenability.hpp"
#include "symmatch/bigraph.hpp"
#include "symmatch/symmetry.hpp"

namespace symmatch {

class LatinSquare {
 public:
  // Throws InputError unless every row and column is a permutation of 0..n-1.
  explicit LatinSquare(std::vector<std::vector<int>> table);
  // Addition table of Z_n.
  static LatinSquare cyclic(int order);
  // No validation; for mutation tests of the downstream verifiers.
  static LatinSquare unchecked(std::vector<std::vector<int>> table);

  int order() const { return static_cast<int>(table_.size()); }
  int operator()(int g, int h) const { return table_[g][h]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  bool is_latin() const;

 private:
  LatinSquare() = default;
  std::vector<std::vector<int>> table_;
};

struct CounterexampleBundle {
  SymGraph sym_graph;
  ParadoxDecomp decomposition;
  LatinSquare phi;
  FiniteSubset index_set;

  int index_count() const { return static_cast<int>(index_set.size()); }
  static int b_orbit(int h, int copy) { return 2 * h + (copy - 1); }
};

// Throws InputError when phi.order() != |F|.
CounterexampleBundle build_counterexample(const ParadoxDecomp& p, const LatinSquare& phi);

// The untwisted first version: A = G, B = G x {1, 2} with edges (x g, (x, i)).
// Not proper whenever |F| > 1.
SymGraph build_untwisted_counterexample(const ParadoxDecomp& p);

// The explicit perfect matching restricted to a materialized window of the
// bundle's graph:
//   ((x g, phi(g, h)), (x, h, 1)) for g = classify_a(x),
//   ((x g', phi(g', h)), (x, h, 2)) for g' = classify_b(x),
// keeping pairs with both endpoints in the window.
Matching explicit_matching(const CounterexampleBundle& b, const WindowGraph& w);

// Right-Hall witness of the factor graph: all 2|F| B-orbits against |F| A-orbits.
HallWitness certify_no_symmetric_matching(const CounterexampleBundle& b);

struct WindowVerification {
  int radius = 0;
  int left = 0;
  int right = 0;
  int interior_left = 0;
  int interior_right = 0;
  int matched = 0;
  bool valid_matching = false;  // disjoint pairs, all edges of the window
  int uncovered_interior = 0;
  int doubly_covered = 0;

  bool ok() const { return valid_matching && uncovered_interior == 0 && doubly_covered == 0; }
};

// Materializes the ball of the given radius and checks the explicit matching.
WindowVerification verify_window(const CounterexampleBundle& b, int radius);

}  // namespace symmatch
