#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "bicon/errors.hpp"

namespace bicon {

// An edge x_i y_j in the 1-based labeling used by every interchange format.
struct Edge {
  std::size_t x = 0;
  std::size_t y = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Side { Left, Right };

// A vertex label: x_index when side == Left, y_index otherwise (1-based).
struct Vertex {
  Side side = Side::Left;
  std::size_t index = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline std::string to_string(const Vertex& v) {
  return (v.side == Side::Left ? "x" : "y") + std::to_string(v.index);
}

struct DegreeSummary {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::vector<std::size_t> left_degrees;
  std::vector<std::size_t> right_degrees;
};

// A labeled bipartite graph G[X, Y] with |X| = r and |Y| = s. Row i of the
// adjacency bit matrix is x_{i+1}; member functions take 0-based indices.
// Values are immutable once built.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  // Edgeless graph on parts of size r and s.
  BipartiteGraph(std::size_t r, std::size_t s)
      : r_(r), s_(s), words_per_row_((s + 63) / 64), bits_(r * words_per_row_, 0) {}

  // Bit i*s + j of mask is the edge x_{i+1} y_{j+1}. Requires r*s <= 64.
  static BipartiteGraph from_mask(std::size_t r, std::size_t s, std::uint64_t mask) {
    if (r * s > 64) {
      throw Error(ErrorKind::TooLarge, "edge mask limited to 64 bits, got r*s=" +
                                           std::to_string(r * s));
    }
    BipartiteGraph g(r, s);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        if ((mask >> (i * s + j)) & 1u) g.set(i, j);
      }
    }
    return g;
  }

  [[nodiscard]] std::size_t left_size() const noexcept { return r_; }
  [[nodiscard]] std::size_t right_size() const noexcept { return s_; }
  [[nodiscard]] std::size_t order() const noexcept { return r_ + s_; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return m_; }

  [[nodiscard]] bool adjacent(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_per_row_ + j / 64] >> (j % 64)) & 1u;
  }

  [[nodiscard]] std::size_t left_degree(std::size_t i) const noexcept {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_per_row_; ++w) {
      d += static_cast<std::size_t>(std::popcount(bits_[i * words_per_row_ + w]));
    }
    return d;
  }

  [[nodiscard]] std::size_t right_degree(std::size_t j) const noexcept {
    std::size_t d = 0;
    for (std::size_t i = 0; i < r_; ++i) d += adjacent(i, j) ? 1 : 0;
    return d;
  }

  [[nodiscard]] std::vector<std::size_t> left_neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < s_; ++j) {
      if (adjacent(i, j)) out.push_back(j);
    }
    return out;
  }

  [[nodiscard]] std::vector<std::size_t> right_neighbors(std::size_t j) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < r_; ++i) {
      if (adjacent(i, j)) out.push_back(i);
    }
    return out;
  }

  // Sorted lexicographically, 1-based.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t j = 0; j < s_; ++j) {
        if (adjacent(i, j)) out.push_back({i + 1, j + 1});
      }
    }
    return out;
  }

  [[nodiscard]] std::uint64_t to_mask() const {
    if (r_ * s_ > 64) {
      throw Error(ErrorKind::TooLarge, "edge mask limited to 64 bits");
    }
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t j = 0; j < s_; ++j) {
        if (adjacent(i, j)) mask |= std::uint64_t{1} << (i * s_ + j);
      }
    }
    return mask;
  }

  // The bipartite complement: same parts, exactly the X-Y pairs absent here.
  [[nodiscard]] BipartiteGraph complement() const {
    BipartiteGraph g(r_, s_);
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t w = 0; w < words_per_row_; ++w) {
        std::uint64_t word = ~bits_[i * words_per_row_ + w];
        if (w + 1 == words_per_row_ && s_ % 64 != 0) {
          word &= (std::uint64_t{1} << (s_ % 64)) - 1;
        }
        g.bits_[i * words_per_row_ + w] = word;
        g.m_ += static_cast<std::size_t>(std::popcount(word));
      }
    }
    return g;
  }

  // Copy with one extra vertex appended to the given side, adjacent to the
  // listed 0-based vertices of the opposite side.
  [[nodiscard]] BipartiteGraph with_added_vertex(Side side,
                                                 std::span<const std::size_t> attach) const {
    const bool left = side == Side::Left;
    BipartiteGraph g(r_ + (left ? 1 : 0), s_ + (left ? 0 : 1));
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t j = 0; j < s_; ++j) {
        if (adjacent(i, j)) g.set(i, j);
      }
    }
    for (std::size_t v : attach) {
      if (v >= (left ? s_ : r_)) {
        throw Error(ErrorKind::IndexOutOfRange, "attachment vertex out of range");
      }
      if (left) {
        g.set(r_, v);
      } else {
        g.set(v, s_);
      }
    }
    return g;
  }

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.r_ == b.r_ && a.s_ == b.s_ && a.bits_ == b.bits_;
  }

  friend BipartiteGraph new_graph(std::size_t r, std::size_t s, std::span<const Edge> edges);

 private:
  void set(std::size_t i, std::size_t j) {
    std::uint64_t& word = bits_[i * words_per_row_ + j / 64];
    const std::uint64_t bit = std::uint64_t{1} << (j % 64);
    if (!(word & bit)) {
      word |= bit;
      ++m_;
    }
  }

  std::size_t r_ = 0;
  std::size_t s_ = 0;
  std::size_t words_per_row_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Builds a graph from 1-based edges. Out-of-range and repeated pairs are
// rejected.
inline BipartiteGraph new_graph(std::size_t r, std::size_t s, std::span<const Edge> edges) {
  BipartiteGraph g(r, s);
  for (const Edge& e : edges) {
    if (e.x < 1 || e.x > r || e.y < 1 || e.y > s) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "edge (" + std::to_string(e.x) + "," + std::to_string(e.y) +
                      ") outside [1," + std::to_string(r) + "]x[1," + std::to_string(s) + "]");
    }
    if (g.adjacent(e.x - 1, e.y - 1)) {
      throw Error(ErrorKind::DuplicateEdge,
                  "edge (" + std::to_string(e.x) + "," + std::to_string(e.y) + ") repeated");
    }
    g.set(e.x - 1, e.y - 1);
  }
  return g;
}

inline BipartiteGraph new_graph(std::size_t r, std::size_t s, std::initializer_list<Edge> edges) {
  return new_graph(r, s, std::span<const Edge>(edges.begin(), edges.size()));
}

inline BipartiteGraph bipartite_complement(const BipartiteGraph& g) { return g.complement(); }

inline bool graphs_equal(const BipartiteGraph& a, const BipartiteGraph& b) { return a == b; }

inline BipartiteGraph complete_bipartite(std::size_t r, std::size_t s) {
  return BipartiteGraph(r, s).complement();
}

inline DegreeSummary degrees(const BipartiteGraph& g) {
  if (g.left_size() == 0 || g.right_size() == 0) {
    throw Error(ErrorKind::EmptyPart, "degree summary needs r >= 1 and s >= 1");
  }
  DegreeSummary out;
  out.left_degrees.resize(g.left_size());
  out.right_degrees.assign(g.right_size(), 0);
  for (std::size_t i = 0; i < g.left_size(); ++i) {
    for (std::size_t j = 0; j < g.right_size(); ++j) {
      if (g.adjacent(i, j)) {
        ++out.left_degrees[i];
        ++out.right_degrees[j];
      }
    }
  }
  auto [lmin, lmax] = std::minmax_element(out.left_degrees.begin(), out.left_degrees.end());
  auto [rmin, rmax] = std::minmax_element(out.right_degrees.begin(), out.right_degrees.end());
  out.min_degree = std::min(*lmin, *rmin);
  out.max_degree = std::max(*lmax, *rmax);
  return out;
}

inline std::size_t min_degree(const BipartiteGraph& g) { return degrees(g).min_degree; }

}  // namespace bicon
