#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>

#include "bicon/errors.hpp"

namespace bicon {

// (r, s, m) with 1 <= r <= s and 0 <= m <= floor(rs/2).
class ParameterTriple {
 public:
  static ParameterTriple make(std::int64_t r, std::int64_t s, std::int64_t m) {
    if (r < 1 || s < r) {
      throw Error(ErrorKind::InvalidTriple, "need 1 <= r <= s, got r=" + std::to_string(r) +
                                                " s=" + std::to_string(s));
    }
    if (m < 0 || m > r * s / 2) {
      throw Error(ErrorKind::InvalidTriple, "need 0 <= m <= floor(rs/2) = " + std::to_string(r * s / 2) +
                                                ", got m=" + std::to_string(m));
    }
    return ParameterTriple(r, s, m);
  }

  [[nodiscard]] std::int64_t r() const noexcept { return r_; }
  [[nodiscard]] std::int64_t s() const noexcept { return s_; }
  [[nodiscard]] std::int64_t m() const noexcept { return m_; }
  [[nodiscard]] std::int64_t n() const noexcept { return r_ + s_; }
  // m = d*s + l
  [[nodiscard]] std::int64_t d() const noexcept { return m_ / s_; }
  [[nodiscard]] std::int64_t l() const noexcept { return m_ % s_; }

  friend bool operator==(const ParameterTriple&, const ParameterTriple&) = default;

 private:
  ParameterTriple(std::int64_t r, std::int64_t s, std::int64_t m) : r_(r), s_(s), m_(m) {}

  std::int64_t r_;
  std::int64_t s_;
  std::int64_t m_;
};

struct BoundSet {
  std::int64_t sum_lower = 0;
  std::int64_t sum_upper = 0;
  std::int64_t prod_lower = 0;
  std::int64_t prod_upper = 0;

  friend bool operator==(const BoundSet&, const BoundSet&) = default;
};

// ceil(r/2) * floor(r/2), the largest a*b over a + b <= r.
constexpr std::int64_t half_product(std::int64_t r) noexcept { return ((r + 1) / 2) * (r / 2); }

// Bounds on delta(G) + delta(G^bc) and delta(G) * delta(G^bc) for r <= s.
inline BoundSet delta_bounds(std::int64_t r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "need r >= 1");
  return {0, r, 0, half_product(r)};
}

// Same values as delta_bounds; applies to both kappa and kappa'.
inline BoundSet connectivity_bounds_unconstrained(std::int64_t r) { return delta_bounds(r); }

inline std::int64_t sum_lower_sized(const ParameterTriple& p) { return std::max<std::int64_t>(0, p.r() - p.m()); }

enum class SumUpperBranch { RMinus2, RMinus1, R };

// The formulas below also accept raw (r, s, m) with 1 <= r <= s and m >= 0,
// without the m <= floor(rs/2) hypothesis; the triple overloads are the
// checked entry points.

// Branches are tested in order and the first match wins.
constexpr SumUpperBranch sum_upper_branch(std::int64_t r, std::int64_t s, std::int64_t m) noexcept {
  const std::int64_t n = r + s;
  if (s + 1 <= m && m <= n - 2) return SumUpperBranch::RMinus2;
  if ((1 <= m && m <= s) || (m == n - 1 && r >= 2) || (m % s != 0 && m >= n)) return SumUpperBranch::RMinus1;
  return SumUpperBranch::R;
}

constexpr std::int64_t sum_upper_formula(std::int64_t r, std::int64_t s, std::int64_t m) noexcept {
  switch (sum_upper_branch(r, s, m)) {
    case SumUpperBranch::RMinus2: return r - 2;
    case SumUpperBranch::RMinus1: return r - 1;
    case SumUpperBranch::R: return r;
  }
  return r;
}

inline SumUpperBranch sum_upper_branch(const ParameterTriple& p) { return sum_upper_branch(p.r(), p.s(), p.m()); }

inline std::int64_t sum_upper_sized(const ParameterTriple& p) { return sum_upper_formula(p.r(), p.s(), p.m()); }

enum class ProdUpperBranch { Zero, Divisible, Floor };

constexpr ProdUpperBranch prod_upper_branch(std::int64_t r, std::int64_t s, std::int64_t m) noexcept {
  const std::int64_t n = r + s;
  if (m <= n - 2 || (m == n - 1 && r == 1)) return ProdUpperBranch::Zero;
  if (m % s == 0 && m >= n) return ProdUpperBranch::Divisible;
  return ProdUpperBranch::Floor;
}

inline std::int64_t prod_upper_formula(std::int64_t r, std::int64_t s, std::int64_t m) {
  const std::int64_t d = m / s;
  std::int64_t value = 0;
  switch (prod_upper_branch(r, s, m)) {
    case ProdUpperBranch::Zero: value = 0; break;
    case ProdUpperBranch::Divisible: value = d * (r - d); break;
    case ProdUpperBranch::Floor: value = d * (r - 1 - d); break;
  }
  if (value < 0) {
    throw Error(ErrorKind::InvalidTriple, "product bound evaluated negative for r=" + std::to_string(r) +
                                              " s=" + std::to_string(s) + " m=" + std::to_string(m));
  }
  return value;
}

inline ProdUpperBranch prod_upper_branch(const ParameterTriple& p) { return prod_upper_branch(p.r(), p.s(), p.m()); }

inline std::int64_t prod_upper_sized(const ParameterTriple& p) { return prod_upper_formula(p.r(), p.s(), p.m()); }

inline BoundSet sized_bounds(const ParameterTriple& p) {
  return {sum_lower_sized(p), sum_upper_sized(p), 0, prod_upper_sized(p)};
}

}  // namespace bicon
