#include "symmatch/bigraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "symmatch/error.hpp"

namespace symmatch {

const char* side_name(Side s) { return s == Side::kLeft ? "left" : "right"; }

FiniteBigraph::FiniteBigraph(int left_count, int right_count, std::vector<Edge> edges)
    : left_count_(left_count), right_count_(right_count), edges_(std::move(edges)) {
  build();
}

FiniteBigraph::FiniteBigraph(int left_count, int right_count, std::vector<Edge> edges,
                             std::vector<double> weights)
    : left_count_(left_count), right_count_(right_count) {
  if (weights.size() != edges.size()) {
    throw InputError("weight count " + std::to_string(weights.size()) +
                     " does not match edge count " + std::to_string(edges.size()));
  }
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return edges[x] < edges[y]; });
  for (auto k : order) {
    if (!std::isfinite(weights[k]) || weights[k] < 0) {
      throw InputError("edge weights must be finite and >= 0");
    }
    edges_.push_back(edges[k]);
    weights_.push_back(weights[k]);
  }
  build();
}

void FiniteBigraph::build() {
  if (left_count_ < 0 || right_count_ < 0) throw InputError("vertex counts must be >= 0");
  if (weights_.empty()) std::sort(edges_.begin(), edges_.end());
  left_adj_.assign(left_count_, {});
  right_adj_.assign(right_count_, {});
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto& e = edges_[k];
    if (e.left < 0 || e.left >= left_count_ || e.right < 0 || e.right >= right_count_) {
      throw InputError("edge (" + std::to_string(e.left) + "," + std::to_string(e.right) +
                       ") out of bounds");
    }
    if (k > 0 && edges_[k - 1] == e) {
      throw InputError("duplicate edge (" + std::to_string(e.left) + "," +
                       std::to_string(e.right) + ")");
    }
    left_adj_[e.left].push_back(e.right);
    right_adj_[e.right].push_back(e.left);
  }
  // Edges are sorted by (left, right), so left lists are already ascending
  // and right lists receive lefts in ascending order too.
}

FiniteBigraph FiniteBigraph::complete(int left_count, int right_count) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(left_count) * right_count);
  for (int i = 0; i < left_count; ++i) {
    for (int j = 0; j < right_count; ++j) edges.push_back({i, j});
  }
  return FiniteBigraph(left_count, right_count, std::move(edges));
}

std::span<const int> FiniteBigraph::adjacent(Side s, int v) const {
  const auto& adj = s == Side::kLeft ? left_adj_ : right_adj_;
  if (v < 0 || v >= static_cast<int>(adj.size())) {
    throw InputError(std::string(side_name(s)) + " vertex " + std::to_string(v) +
                     " out of bounds");
  }
  return adj[v];
}

bool FiniteBigraph::has_edge(int left, int right) const {
  const auto adj = adjacent(Side::kLeft, left);
  return std::binary_search(adj.begin(), adj.end(), right);
}

FiniteBigraph FiniteBigraph::transposed() const {
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) edges.push_back({e.right, e.left});
  if (weights_.empty()) return FiniteBigraph(right_count_, left_count_, std::move(edges));
  return FiniteBigraph(right_count_, left_count_, std::move(edges), weights_);
}

FiniteBigraph FiniteBigraph::edges_up_to(double threshold) const {
  std::vector<Edge> edges;
  std::vector<double> weights;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (weights_[k] <= threshold) {
      edges.push_back(edges_[k]);
      weights.push_back(weights_[k]);
    }
  }
  return FiniteBigraph(left_count_, right_count_, std::move(edges), std::move(weights));
}

IndexSet neighborhood(const FiniteBigraph& g, Side side, std::span<const int> subset) {
  std::vector<bool> hit(g.count(opposite(side)), false);
  for (int v : subset) {
    for (int w : g.adjacent(side, v)) hit[w] = true;
  }
  IndexSet out;
  for (int w = 0; w < static_cast<int>(hit.size()); ++w) {
    if (hit[w]) out.push_back(w);
  }
  return out;
}

namespace {

constexpr int kFree = -1;
constexpr int kInf = std::numeric_limits<int>::max();

// Hopcroft-Karp state; mate_left/mate_right hold partner indices or kFree.
class HopcroftKarp {
 public:
  explicit HopcroftKarp(const FiniteBigraph& g)
      : g_(g),
        mate_left_(g.left_count(), kFree),
        mate_right_(g.right_count(), kFree),
        dist_(g.left_count(), kInf),
        next_(g.left_count(), 0) {}

  void run() {
    while (bfs()) {
      std::fill(next_.begin(), next_.end(), 0);
      for (int u = 0; u < g_.left_count(); ++u) {
        if (mate_left_[u] == kFree) dfs(u);
      }
    }
  }

  Matching matching() const {
    Matching m;
    for (int u = 0; u < g_.left_count(); ++u) {
      if (mate_left_[u] != kFree) m.pairs.push_back({u, mate_left_[u]});
    }
    return m;
  }

  const std::vector<int>& mate_left() const { return mate_left_; }
  const std::vector<int>& mate_right() const { return mate_right_; }

 private:
  bool bfs() {
    std::queue<int> queue;
    for (int u = 0; u < g_.left_count(); ++u) {
      if (mate_left_[u] == kFree) {
        dist_[u] = 0;
        queue.push(u);
      } else {
        dist_[u] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int v : g_.adjacent(Side::kLeft, u)) {
        const int w = mate_right_[v];
        if (w == kFree) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    const auto adj = g_.adjacent(Side::kLeft, u);
    for (int& k = next_[u]; k < static_cast<int>(adj.size()); ++k) {
      const int v = adj[k];
      const int w = mate_right_[v];
      if (w == kFree || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        mate_left_[u] = v;
        mate_right_[v] = u;
        ++k;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const FiniteBigraph& g_;
  std::vector<int> mate_left_;
  std::vector<int> mate_right_;
  std::vector<int> dist_;
  std::vector<int> next_;
};

// Left vertices reachable by alternating paths from unmatched left vertices.
std::optional<HallWitness> left_witness(const FiniteBigraph& g) {
  HopcroftKarp hk(g);
  hk.run();
  const auto& mate_left = hk.mate_left();
  const auto& mate_right = hk.mate_right();
  std::vector<bool> seen_left(g.left_count(), false);
  std::vector<bool> seen_right(g.right_count(), false);
  std::queue<int> queue;
  for (int u = 0; u < g.left_count(); ++u) {
    if (mate_left[u] == kFree) {
      seen_left[u] = true;
      queue.push(u);
    }
  }
  if (queue.empty()) return std::nullopt;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int v : g.adjacent(Side::kLeft, u)) {
      if (seen_right[v]) continue;
      seen_right[v] = true;
      // v is matched, otherwise the matching would not be maximum.
      const int w = mate_right[v];
      if (!seen_left[w]) {
        seen_left[w] = true;
        queue.push(w);
      }
    }
  }
  HallWitness witness{Side::kLeft, {}, 0};
  for (int u = 0; u < g.left_count(); ++u) {
    if (seen_left[u]) witness.subset.push_back(u);
  }
  witness.neighborhood_size =
      static_cast<int>(std::count(seen_right.begin(), seen_right.end(), true));
  return witness;
}

}  // namespace

Matching max_matching(const FiniteBigraph& g) {
  HopcroftKarp hk(g);
  hk.run();
  return hk.matching();
}

void validate_matching(const FiniteBigraph& g, const Matching& m) {
  std::vector<bool> used_left(g.left_count(), false);
  std::vector<bool> used_right(g.right_count(), false);
  for (const auto& e : m.pairs) {
    if (e.left < 0 || e.left >= g.left_count() || e.right < 0 ||
        e.right >= g.right_count() || !g.has_edge(e.left, e.right)) {
      throw InputError("matching pair (" + std::to_string(e.left) + "," +
                       std::to_string(e.right) + ") is not an edge");
    }
    if (used_left[e.left] || used_right[e.right]) {
      throw InputError("matching pairs are not vertex-disjoint at (" +
                       std::to_string(e.left) + "," + std::to_string(e.right) + ")");
    }
    used_left[e.left] = true;
    used_right[e.right] = true;
  }
}

bool covers(const Matching& m, Side side, int vertex_count) {
  std::vector<bool> hit(vertex_count, false);
  for (const auto& e : m.pairs) {
    const int v = side == Side::kLeft ? e.left : e.right;
    if (v >= 0 && v < vertex_count) hit[v] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_perfect(const FiniteBigraph& g, const Matching& m) {
  validate_matching(g, m);
  return static_cast<int>(m.size()) == g.left_count() &&
         static_cast<int>(m.size()) == g.right_count();
}

std::optional<HallWitness> hall_check(const FiniteBigraph& g, Side side) {
  if (side == Side::kLeft) return left_witness(g);
  auto witness = left_witness(g.transposed());
  if (witness) witness->side = Side::kRight;
  return witness;
}

std::optional<HallWitness> hall_check_restricted(const FiniteBigraph& g, Side side,
                                                 const std::vector<bool>& active) {
  if (static_cast<int>(active.size()) != g.count(side)) {
    throw InputError("active mask size does not match side size");
  }
  std::vector<int> kept;
  std::vector<int> position(active.size(), -1);
  for (int v = 0; v < static_cast<int>(active.size()); ++v) {
    if (active[v]) {
      position[v] = static_cast<int>(kept.size());
      kept.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (int v : kept) {
    for (int w : g.adjacent(side, v)) edges.push_back({position[v], w});
  }
  const FiniteBigraph sub(static_cast<int>(kept.size()), g.count(opposite(side)),
                          std::move(edges));
  auto witness = left_witness(sub);
  if (!witness) return std::nullopt;
  witness->side = side;
  for (int& v : witness->subset) v = kept[v];
  return witness;
}

std::optional<BottleneckResult> bottleneck_matching(const FiniteBigraph& g) {
  if (!g.weighted()) throw InputError("bottleneck matching requires edge weights");
  if (g.left_count() != g.right_count()) return std::nullopt;
  if (g.left_count() == 0) return BottleneckResult{0.0, {}};
  const auto perfect_at = [&](double threshold) -> std::optional<Matching> {
    auto m = max_matching(g.edges_up_to(threshold));
    if (static_cast<int>(m.size()) != g.left_count()) return std::nullopt;
    return m;
  };
  std::vector<double> candidates(g.weights().begin(), g.weights().end());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  auto best = perfect_at(candidates.back());
  if (!best) return std::nullopt;
  // Invariant: candidates[hi] admits a perfect matching, candidates[lo - 1] does not.
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (auto m = perfect_at(candidates[mid])) {
      hi = mid;
      best = std::move(m);
    } else {
      lo = mid + 1;
    }
  }
  return BottleneckResult{candidates[hi], std::move(*best)};
}

}  // namespace symmatch
