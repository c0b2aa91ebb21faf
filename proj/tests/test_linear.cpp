#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "repknit/checked.hpp"
#include "repknit/exact_linear.hpp"

namespace repknit {
namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> coef(-3, 3);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = coef(rng);
  return m;
}

TEST(ExactLinear, RankOfIdentityAndZero) {
  EXPECT_EQ(rank(Matrix::identity(5)), 5u);
  EXPECT_EQ(rank(Matrix(3, 4)), 0u);
}

TEST(ExactLinear, RankOfDependentRows) {
  const Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  EXPECT_EQ(rank(m), 2u);
}

TEST(ExactLinear, NullspaceIsAnnihilatedAndHasComplementaryDimension) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = 1 + trial % 5, c = 1 + (trial * 7) % 6;
    const Matrix m = random_matrix(rng, r, c);
    const auto ns = nullspace(m);
    EXPECT_EQ(ns.size() + rank(m), c);
    for (const auto& v : ns)
      for (const auto& x : m.apply(v)) EXPECT_EQ(x, 0);
  }
}

TEST(ExactLinear, SolveReturnsSolutionOrNothing) {
  const Matrix m = Matrix::from_rows({{1, 1}, {1, -1}}, 2);
  const auto x = solve(m, {3, 1});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 2);
  EXPECT_EQ((*x)[1], 1);
  const Matrix singular = Matrix::from_rows({{1, 1}, {2, 2}}, 2);
  EXPECT_FALSE(solve(singular, {1, 3}));
}

TEST(ExactLinear, SolveRoundTripsOnRandomSystems) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix m = random_matrix(rng, 4, 3);
    const std::vector<Rational> x0{Rational(1, 2), -2, 3};
    const auto x = solve(m, m.apply(x0));
    ASSERT_TRUE(x);
    EXPECT_EQ(m.apply(*x), m.apply(x0));
  }
}

TEST(ExactLinear, RationalArithmeticIsExact) {
  Matrix m = Matrix::from_rows({{Rational(1, 3), Rational(2, 3)}, {Rational(1, 6), Rational(1, 3)}}, 2);
  EXPECT_EQ(rank(m), 1u);
}

TEST(ExactLinear, QuotientDimensionAndReduction) {
  const Quotient qt(3, {{1, -1, 0}});
  EXPECT_EQ(qt.ambient(), 3u);
  EXPECT_EQ(qt.dim(), 2u);
  EXPECT_EQ(qt.reduce({1, 0, 0}), qt.reduce({0, 1, 0}));
  EXPECT_NE(qt.reduce({1, 0, 0}), qt.reduce({0, 0, 1}));
}

TEST(ExactLinear, ProductAssociates) {
  std::mt19937_64 rng(3);
  const Matrix a = random_matrix(rng, 2, 3), b = random_matrix(rng, 3, 4), c = random_matrix(rng, 4, 2);
  const Matrix l = (a * b) * c, r = a * (b * c);
  EXPECT_TRUE((l - r).is_zero());
}

TEST(Checked, OverflowThrows) {
  const auto big = std::numeric_limits<std::int64_t>::max();
  EXPECT_EQ(checked::add(2, 3), 5);
  try {
    checked::add(big, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ArithmeticOverflow);
  }
  EXPECT_THROW(checked::mul(big, 2), Error);
  EXPECT_THROW(checked::sub(std::numeric_limits<std::int64_t>::min(), 1), Error);
}

}  // namespace
}  // namespace repknit
