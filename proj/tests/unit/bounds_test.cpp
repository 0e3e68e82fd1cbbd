#include <gtest/gtest.h>

#include "bicon/bounds.hpp"

using namespace bicon;

namespace {

ParameterTriple T(std::int64_t r, std::int64_t s, std::int64_t m) { return ParameterTriple::make(r, s, m); }

}  // namespace

TEST(Triple, Validation) {
  EXPECT_THROW(T(0, 1, 0), Error);
  EXPECT_THROW(T(3, 2, 0), Error);
  EXPECT_THROW(T(2, 2, 3), Error);
  EXPECT_THROW(T(2, 2, -1), Error);
  const auto p = T(4, 5, 7);
  EXPECT_EQ(p.n(), 9);
  EXPECT_EQ(p.d(), 1);
  EXPECT_EQ(p.l(), 2);
}

TEST(Unconstrained, Values) {
  EXPECT_EQ(delta_bounds(5), (BoundSet{0, 5, 0, 6}));
  EXPECT_EQ(delta_bounds(4).prod_upper, 4);
  EXPECT_EQ(delta_bounds(1), (BoundSet{0, 1, 0, 0}));
  EXPECT_EQ(connectivity_bounds_unconstrained(4), (BoundSet{0, 4, 0, 4}));
  EXPECT_EQ(connectivity_bounds_unconstrained(2).prod_upper, 1);
  EXPECT_EQ(connectivity_bounds_unconstrained(7).prod_upper, 12);
  EXPECT_THROW(delta_bounds(0), Error);
}

// ceil(r/2)floor(r/2) is the maximum of a*b over nonnegative a + b <= r.
TEST(Unconstrained, HalfProductIsMaximum) {
  for (std::int64_t r = 1; r <= 64; ++r) {
    std::int64_t best = 0;
    for (std::int64_t a = 0; a <= r; ++a) best = std::max(best, a * (r - a));
    EXPECT_EQ(half_product(r), best);
  }
}

TEST(Sized, LowerExamples) {
  EXPECT_EQ(sum_lower_sized(T(5, 5, 2)), 3);
  EXPECT_EQ(sum_lower_sized(T(3, 8, 7)), 0);
  EXPECT_EQ(sum_lower_sized(T(4, 4, 4)), 0);
}

TEST(Sized, UpperExamples) {
  EXPECT_EQ(sum_upper_sized(T(4, 5, 7)), 2);
  // m = 11 exceeds floor(rs/2) = 10, so only the raw formula applies
  EXPECT_THROW(T(4, 5, 11), Error);
  EXPECT_EQ(sum_upper_formula(4, 5, 11), 3);
  EXPECT_EQ(sum_upper_sized(T(4, 5, 10)), 4);
  EXPECT_EQ(sum_upper_sized(T(4, 5, 0)), 4);
  EXPECT_EQ(prod_upper_sized(T(4, 5, 10)), 4);
  EXPECT_EQ(prod_upper_sized(T(4, 5, 7)), 0);
  EXPECT_EQ(prod_upper_formula(4, 5, 11), 2);
  EXPECT_EQ(prod_upper_branch(4, 5, 11), ProdUpperBranch::Floor);
  EXPECT_EQ(sized_bounds(T(4, 5, 10)), (BoundSet{0, 4, 0, 4}));
}

TEST(Sized, BranchTotalityAndRanges) {
  for (std::int64_t r = 1; r <= 8; ++r) {
    for (std::int64_t s = r; s <= 8; ++s) {
      for (std::int64_t m = 0; m <= r * s / 2; ++m) {
        const auto p = T(r, s, m);
        const auto n = sum_upper_sized(p);
        EXPECT_GE(n, sum_lower_sized(p));
        EXPECT_LE(n, r);
        EXPECT_GE(n, r - 2);
        const auto mm = prod_upper_sized(p);
        EXPECT_GE(mm, 0);
        EXPECT_LE(mm, half_product(r));
      }
    }
  }
}
