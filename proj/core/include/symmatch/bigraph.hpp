#pragma once

// Finite bipartite graphs: maximum matching (Hopcroft-Karp), Hall checking
// with certified violations, and bottleneck perfect matching.

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace symmatch {

enum class Side { kLeft, kRight };

inline Side opposite(Side s) { return s == Side::kLeft ? Side::kRight : Side::kLeft; }
const char* side_name(Side s);

struct Edge {
  int left = 0;
  int right = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free vertex indices on one side.
using IndexSet = std::vector<int>;

class FiniteBigraph {
 public:
  FiniteBigraph() = default;
  // Throws InputError on out-of-range indices or duplicate edges.
  FiniteBigraph(int left_count, int right_count, std::vector<Edge> edges);
  // Weighted variant; weights[k] belongs to edges[k] and must be finite and >= 0.
  FiniteBigraph(int left_count, int right_count, std::vector<Edge> edges,
                std::vector<double> weights);

  static FiniteBigraph complete(int left_count, int right_count);

  int left_count() const { return left_count_; }
  int right_count() const { return right_count_; }
  int count(Side s) const { return s == Side::kLeft ? left_count_ : right_count_; }
  // Edges in ascending (left, right) order.
  std::span<const Edge> edges() const& { return edges_; }
  std::span<const Edge> edges() const&& = delete;
  bool weighted() const { return !weights_.empty() || edges_.empty(); }
  // Aligned with edges(); empty for unweighted graphs.
  std::span<const double> weights() const& { return weights_; }
  std::span<const double> weights() const&& = delete;
  // Ascending neighbor indices of vertex v on side s.
  std::span<const int> adjacent(Side s, int v) const;
  bool has_edge(int left, int right) const;
  // Same graph with sides exchanged.
  FiniteBigraph transposed() const;
  // Keeps only the edges whose weight is <= threshold.
  FiniteBigraph edges_up_to(double threshold) const;

 private:
  void build();

  int left_count_ = 0;
  int right_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<double> weights_;
  std::vector<std::vector<int>> left_adj_;
  std::vector<std::vector<int>> right_adj_;
};

struct Matching {
  // Ascending by left index.
  std::vector<Edge> pairs;

  std::size_t size() const { return pairs.size(); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

// A certified violation of the Hall condition on one side:
// |subset| > |neighborhood(subset)| == neighborhood_size.
struct HallWitness {
  Side side = Side::kLeft;
  IndexSet subset;
  int neighborhood_size = 0;

  int deficiency() const { return static_cast<int>(subset.size()) - neighborhood_size; }
  friend bool operator==(const HallWitness&, const HallWitness&) = default;
};

IndexSet neighborhood(const FiniteBigraph& g, Side side, std::span<const int> subset);

// Deterministic Hopcroft-Karp.
Matching max_matching(const FiniteBigraph& g);

// Throws InputError unless m is a matching of g.
void validate_matching(const FiniteBigraph& g, const Matching& m);
bool is_perfect(const FiniteBigraph& g, const Matching& m);
bool covers(const Matching& m, Side side, int vertex_count);

// nullopt when every subset of `side` satisfies Hall; otherwise the
// alternating-reachability witness of a maximum matching.
std::optional<HallWitness> hall_check(const FiniteBigraph& g, Side side);
// Hall restricted to the vertices of `side` flagged in `active`; the other
// side is used in full. Witness indices refer to g.
std::optional<HallWitness> hall_check_restricted(const FiniteBigraph& g, Side side,
                                                 const std::vector<bool>& active);

struct BottleneckResult {
  double threshold = 0.0;
  Matching matching;
};

// Least r such that the edges of weight <= r contain a perfect matching,
// or nullopt when g has no perfect matching at all.
std::optional<BottleneckResult> bottleneck_matching(const FiniteBigraph& g);

}  // namespace symmatch
