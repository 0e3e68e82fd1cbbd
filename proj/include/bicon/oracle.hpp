#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>

#include "bicon/graph.hpp"

namespace bicon {

// Adjacency as per-vertex neighbor masks for graphs of at most 32 vertices.
// Vertex k < r is x_{k+1}; vertex r + j is y_{j+1}.
class SmallGraph {
 public:
  static constexpr std::size_t kMaxOrder = 32;

  SmallGraph() = default;

  explicit SmallGraph(const BipartiteGraph& g) : n_(g.order()) {
    if (n_ > kMaxOrder) {
      throw Error(ErrorKind::TooLarge, "small-graph form holds at most 32 vertices");
    }
    const std::size_t r = g.left_size();
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < g.right_size(); ++j) {
        if (g.adjacent(i, j)) link(i, r + j);
      }
    }
  }

  // Direct construction from an edge mask (bit i*s + j is x_{i+1} y_{j+1}).
  static SmallGraph from_mask(std::size_t r, std::size_t s, std::uint64_t mask) {
    SmallGraph g;
    g.n_ = r + s;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        if ((mask >> (i * s + j)) & 1u) g.link(i, r + j);
      }
    }
    return g;
  }

  [[nodiscard]] std::size_t order() const noexcept { return n_; }
  [[nodiscard]] std::uint32_t neighbors(std::size_t v) const noexcept { return adj_[v]; }
  [[nodiscard]] std::uint32_t all() const noexcept {
    return n_ == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n_) - 1;
  }

  // Whether the induced subgraph on `alive` is connected (empty counts as
  // connected).
  [[nodiscard]] bool connected_within(std::uint32_t alive) const noexcept {
    if (alive == 0) return true;
    std::uint32_t reached = alive & (~alive + 1);
    std::uint32_t frontier = reached;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const std::uint32_t fresh = adj_[v] & alive & ~reached;
      reached |= fresh;
      frontier |= fresh;
    }
    return reached == alive;
  }

  [[nodiscard]] bool connected() const noexcept { return connected_within(all()); }

  [[nodiscard]] std::size_t min_degree() const noexcept {
    std::size_t best = n_;
    for (std::size_t v = 0; v < n_; ++v) {
      best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(adj_[v])));
    }
    return best;
  }

 private:
  void link(std::size_t u, std::size_t v) {
    adj_[u] |= std::uint32_t{1} << v;
    adj_[v] |= std::uint32_t{1} << u;
  }

  std::size_t n_ = 0;
  std::array<std::uint32_t, kMaxOrder> adj_{};
};

inline constexpr std::size_t kBruteForceMaxOrder = 16;

namespace detail {

inline void check_brute_force_size(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::TooSmall, "connectivity needs at least two vertices");
  if (n > kBruteForceMaxOrder) {
    throw Error(ErrorKind::TooLarge, "brute-force oracle limited to r+s <= 16, got " + std::to_string(n));
  }
}

}  // namespace detail

// Minimum number of edges crossing a nonempty proper vertex subset; 0 when the
// graph is disconnected. Subsets are taken to contain vertex 0 to halve work.
inline std::size_t brute_force_edge_connectivity(const SmallGraph& g) {
  const std::size_t n = g.order();
  detail::check_brute_force_size(n);
  if (!g.connected()) return 0;
  const std::uint32_t all = g.all();
  std::size_t best = n * n;
  for (std::uint32_t rest = 0; rest < (std::uint32_t{1} << (n - 1)); ++rest) {
    const std::uint32_t side = (rest << 1) | 1u;
    if (side == all) continue;
    std::size_t crossing = 0;
    for (std::uint32_t bits = side; bits; bits &= bits - 1) {
      crossing += static_cast<std::size_t>(std::popcount(g.neighbors(std::countr_zero(bits)) & ~side));
    }
    best = std::min(best, crossing);
  }
  return best;
}

// Minimum |S| such that G - S is disconnected or has at most one vertex.
inline std::size_t brute_force_vertex_connectivity(const SmallGraph& g) {
  const std::size_t n = g.order();
  detail::check_brute_force_size(n);
  const std::uint32_t all = g.all();
  std::size_t best = n;
  for (std::uint32_t removed = 0; removed <= all; ++removed) {
    const auto size = static_cast<std::size_t>(std::popcount(removed));
    if (size >= best) continue;
    const std::uint32_t alive = all & ~removed;
    if (std::popcount(alive) <= 1 || !g.connected_within(alive)) best = size;
  }
  return best;
}

inline std::size_t brute_force_edge_connectivity(const BipartiteGraph& g) {
  detail::check_brute_force_size(g.order());
  return brute_force_edge_connectivity(SmallGraph(g));
}

inline std::size_t brute_force_vertex_connectivity(const BipartiteGraph& g) {
  detail::check_brute_force_size(g.order());
  return brute_force_vertex_connectivity(SmallGraph(g));
}

}  // namespace bicon
