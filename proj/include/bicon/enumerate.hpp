#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "bicon/graph.hpp"

namespace bicon {

inline constexpr std::size_t kFullEnumerationMaxBits = 24;
inline constexpr std::size_t kFixedEnumerationMaxBits = 30;
inline constexpr std::uint64_t kEnumerationMaxCount = std::uint64_t{1} << 24;

// C(n, k), saturating at UINT64_MAX.
constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    if (acc > UINT64_MAX / num) return UINT64_MAX;
    acc = acc * num / i;
  }
  return acc;
}

// All labeled graphs on parts (r, s), optionally restricted to exactly m
// edges, as edge masks in ascending numeric order. Bit i*s + j of a mask is
// the edge x_{i+1} y_{j+1}.
class GraphEnumeration {
 public:
  GraphEnumeration(std::size_t r, std::size_t s, std::optional<std::size_t> m = std::nullopt)
      : r_(r), s_(s), m_(m), bits_(r * s) {
    if (m_) {
      if (*m_ > bits_) throw Error(ErrorKind::InvalidArgument, "m exceeds r*s");
      count_ = bits_ <= 64 ? binomial(bits_, *m_) : UINT64_MAX;
      if (bits_ > kFixedEnumerationMaxBits || count_ > kEnumerationMaxCount) {
        throw Error(ErrorKind::TooLarge, "enumeration of C(" + std::to_string(bits_) + "," + std::to_string(*m_) +
                                             ") = " + std::to_string(count_) +
                                             " graphs exceeds caps (rs <= 30, count <= 2^24)");
      }
    } else {
      if (bits_ > kFullEnumerationMaxBits) {
        throw Error(ErrorKind::TooLarge, "enumeration of 2^" + std::to_string(bits_) +
                                             " graphs exceeds cap rs <= 24");
      }
      count_ = std::uint64_t{1} << bits_;
    }
  }

  [[nodiscard]] std::size_t left_size() const noexcept { return r_; }
  [[nodiscard]] std::size_t right_size() const noexcept { return s_; }
  [[nodiscard]] std::optional<std::size_t> edge_count() const noexcept { return m_; }
  [[nodiscard]] std::uint64_t count() const noexcept { return count_; }

  // The mask at position `rank` of the ascending order.
  [[nodiscard]] std::uint64_t mask_at(std::uint64_t rank) const noexcept {
    if (!m_) return rank;
    // Ascending order of fixed-popcount masks is colex order of their bit
    // positions; unrank greedily from the top bit down.
    std::uint64_t mask = 0;
    std::size_t k = *m_;
    for (std::size_t pos = bits_; pos-- > 0 && k > 0;) {
      const std::uint64_t below = binomial(pos, k);
      if (rank >= below) {
        mask |= std::uint64_t{1} << pos;
        rank -= below;
        --k;
      }
    }
    return mask;
  }

  // Calls fn(mask) for ranks in [begin, end).
  template <typename Fn>
  void for_each_mask(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
    if (begin >= end) return;
    std::uint64_t mask = mask_at(begin);
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      fn(mask);
      mask = next_mask(mask);
    }
  }

  template <typename Fn>
  void for_each_mask(Fn&& fn) const {
    for_each_mask(0, count_, std::forward<Fn>(fn));
  }

  template <typename Fn>
  void for_each_graph(Fn&& fn) const {
    for_each_mask([&](std::uint64_t mask) { fn(BipartiteGraph::from_mask(r_, s_, mask)); });
  }

 private:
  [[nodiscard]] std::uint64_t next_mask(std::uint64_t mask) const noexcept {
    if (!m_) return mask + 1;
    if (mask == 0) return 0;
    // Gosper's hack: next larger integer with the same popcount.
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    return ripple | (((mask ^ ripple) >> 2) / low);
  }

  std::size_t r_;
  std::size_t s_;
  std::optional<std::size_t> m_;
  std::size_t bits_;
  std::uint64_t count_ = 0;
};

}  // namespace bicon
