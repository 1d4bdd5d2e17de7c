#pragma once

// G-symmetric bipartite graphs presented by orbit representatives.
//
// A SymGraph over G has vertex sets A = G x {0..a_orbits-1} and
// B = G x {0..b_orbits-1}; G acts by left multiplication on the group
// coordinate. A triple (i, g, j) stands for the edge orbit
//   { ((h, i), (h*g, j)) : h in G }.
// The factor graph is then the plain reindexing (i, j) of the triples.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "symmatch/bigraph.hpp"
#include "symmatch/groups.hpp"
#include "symmatch/ratio.hpp"

namespace symmatch {

struct Triple {
  int a = 0;  // A-orbit index
  GroupElem g;
  int b = 0;  // B-orbit index
};

class SymGraph {
 public:
  // Validates indices, group membership and uniqueness, then stores the
  // triples in canonical order: (a, serialized g, b) lexicographically.
  SymGraph(GroupDescriptor group, int a_orbits, int b_orbits, std::vector<Triple> triples);

  const GroupDescriptor& group() const { return group_; }
  int a_orbits() const { return a_orbits_; }
  int b_orbits() const { return b_orbits_; }
  std::span<const Triple> triples() const& { return triples_; }
  std::span<const Triple> triples() const&& = delete;
  int orbits(Side s) const { return s == Side::kLeft ? a_orbits_ : b_orbits_; }

  // Group offsets from (e, orbit) to each presented neighbor: g for A-orbits,
  // g^-1 for B-orbits, paired with the neighbor's orbit.
  std::vector<std::pair<GroupElem, int>> offsets(Side side, int orbit) const;

 private:
  GroupDescriptor group_;
  int a_orbits_ = 0;
  int b_orbits_ = 0;
  std::vector<Triple> triples_;
};

using OrbitPair = std::pair<int, int>;

struct FactorGraph {
  FiniteBigraph underlying;
  // Group elements of all triples on each factor edge, in canonical order.
  std::map<OrbitPair, std::vector<GroupElem>> multiplicity;
};

// A G-symmetric matching described by its orbit data: each key is a factor
// edge, the value the group element selecting one edge of that orbit pair.
struct SymMatching {
  std::map<OrbitPair, GroupElem> chosen;

  friend bool operator==(const SymMatching&, const SymMatching&) = default;
};

FactorGraph factor(const SymGraph& sg);
// True iff no orbit pair carries more than one triple.
bool is_proper(const SymGraph& sg);

struct VertexLabel {
  GroupElem h;
  int orbit = 0;
};

// A finite piece of the infinite graph. Vertex (h, i) has index
// position(h) * orbits + i, where position is the canonical window order.
struct WindowGraph {
  FiniteSubset window;
  FiniteBigraph graph;
  std::vector<VertexLabel> left;
  std::vector<VertexLabel> right;
  // Vertices all of whose presented neighbors lie inside the window.
  std::vector<bool> left_interior;
  std::vector<bool> right_interior;
  int a_orbits = 0;
  int b_orbits = 0;

  int interior_count(Side s) const;
};

WindowGraph materialize(const SymGraph& sg, const FiniteSubset& window);

// Searches a materialized window for edges (x, y), (g x, y) with g != e.
// Returns the pair of left labels when one exists.
std::optional<std::pair<VertexLabel, VertexLabel>> find_improper_pair(const SymGraph& sg,
                                                                       const FiniteSubset& window);

// Per-edge overrides for lift; edges without an entry use the first element
// of the multiplicity list.
using LiftChoice = std::map<OrbitPair, GroupElem>;

SymMatching lift(const SymGraph& sg, const Matching& factor_matching,
                 const LiftChoice& choice = {});
Matching project(const SymMatching& sm);

// The edges of `w` that belong to the symmetric matching.
Matching restrict_to_window(const SymMatching& sm, const WindowGraph& w);
// True iff every interior vertex on both sides is matched by m.
bool covers_interior(const WindowGraph& w, const Matching& m);
// Whether some orbit on either side has no interior vertex in the window.
bool has_empty_interior_orbit(const WindowGraph& w);

// Lifted symmetric perfect matching if the factor has a perfect matching,
// otherwise a Hall witness of the factor.
std::variant<SymMatching, HallWitness> symmetric_perfect_matching(const SymGraph& sg);

// Interior Hall violation of a window on the given side: interior vertices of
// that side that cannot all be matched into the window.
std::optional<HallWitness> interior_hall_violation(const WindowGraph& w, Side side);

struct ProbeRow {
  std::size_t window = 0;    // index into the window family
  std::vector<int> orbits;   // the orbit subset X~ on the probed side
  std::int64_t f = 0;        // |F|
  std::int64_t x = 0;        // |X| = |X~|
  std::int64_t y = 0;        // |Y| = |E~(X~)|
  std::int64_t fu = 0;       // |FU|
  std::int64_t efx = 0;      // |E(FX)|, counted directly
  Ratio ratio;               // |FU| / |F|
  // |F||X| <= |FU||Y|: holds whenever the infinite graph satisfies Hall.
  bool counting_holds = false;
  // |FU||Y| < |F|(|Y| + 1), so the chain forces |X~| <= |Y~|.
  bool certifies = false;
};

struct WindowHallRow {
  std::size_t window = 0;
  std::int64_t size = 0;
  int interior = 0;
  std::optional<HallWitness> violation;
};

struct ProbeReport {
  Side side = Side::kLeft;
  std::vector<ProbeRow> rows;
  std::vector<WindowHallRow> windows;

  bool any_violation() const;
};

// Evaluates the counting argument of the amenable-group proof on every
// window and every non-empty orbit subset of `side` (at most 16 orbits).
ProbeReport window_hall_probe(const SymGraph& sg, const std::vector<FiniteSubset>& windows,
                              Side side);

}  // namespace symmatch
