#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "rfib/identities.hpp"

using namespace rfib;

namespace {

MPoly x(std::size_t arity, std::size_t i) { return MPoly::variable(arity, i); }

// Leibniz formula over all permutations; independent of both determinant routines.
MPoly leibniz(const PolyMatrix& m) {
  const std::size_t d = m.dim();
  std::vector<std::size_t> perm(d);
  for (std::size_t i = 0; i < d; ++i) perm[i] = i;
  MPoly total = MPoly::zero(m.arity());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        if (perm[i] > perm[j]) ++inversions;
    MPoly prod = MPoly::one(m.arity());
    for (std::size_t i = 0; i < d && !prod.is_zero(); ++i) prod *= m(i, perm[i]);
    total += inversions % 2 ? -prod : prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

PolyMatrix random_matrix(std::mt19937_64& rng, std::size_t dim, std::size_t arity) {
  std::uniform_int_distribution<int> c(-3, 3);
  std::uniform_int_distribution<unsigned> e(0, 1);
  PolyMatrix m(dim, arity);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      MPoly p = MPoly::constant(arity, Rational(c(rng)));
      for (std::size_t v = 1; v <= arity; ++v)
        if (e(rng)) p += x(arity, v).scale(Rational(c(rng)));
      m(i, j) = p;
    }
  return m;
}

}  // namespace

TEST(Determinant, Examples) {
  EXPECT_EQ(poly_determinant(PolyMatrix::identity(3, 2)), MPoly::one(2));
  EXPECT_EQ(poly_determinant(PolyMatrix::identity(6, 1)), MPoly::one(1));
  EXPECT_EQ(poly_determinant(PolyMatrix::companion(2)), -x(2, 2));
  PolyMatrix init(2, 2);
  init(0, 0) = MPoly::one(2);
  init(0, 1) = x(2, 1);
  init(1, 1) = MPoly::one(2);
  EXPECT_EQ(poly_determinant(init), MPoly::one(2));
}

TEST(Determinant, CompanionMatrix) {
  // det of the r x r companion matrix is (-1)^{r+1} x_r
  for (unsigned r = 1; r <= 6; ++r) {
    MPoly xr = x(r, r);
    EXPECT_EQ(poly_determinant(PolyMatrix::companion(r)), r % 2 ? xr : -xr) << r;
  }
}

TEST(DeterminantProperty, EliminationAgreesWithExpansion) {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 12; ++iter) {
    PolyMatrix m = random_matrix(rng, 5, 2);
    if (iter % 3 == 0)
      for (std::size_t j = 0; j < 5; ++j) m(0, j) = MPoly::zero(2);  // forces a pivot search
    EXPECT_EQ(bareiss_determinant(m), cofactor_determinant(m));
  }
  for (int iter = 0; iter < 10; ++iter) {
    PolyMatrix m = random_matrix(rng, 4, 3);
    if (iter % 2) m(0, 0) = MPoly::zero(3);
    EXPECT_EQ(bareiss_determinant(m), leibniz(m));
    EXPECT_EQ(cofactor_determinant(m), leibniz(m));
  }
}

TEST(Determinant, MatrixPowerMultiplies) {
  PolyMatrix m = PolyMatrix::companion(3);
  EXPECT_EQ(m.pow(5), m * m * m * m * m);
  EXPECT_EQ(m.pow(0), PolyMatrix::identity(3, 3));
}

TEST(CassiniMatrix, Examples) {
  for (unsigned n = 2; n <= 8; ++n) {
    PolyMatrix m = cassini_matrix(2, n);
    EXPECT_EQ(m(0, 0), fib_recursive({2, n - 1}));
    EXPECT_EQ(m(0, 1), fib_recursive({2, n}));
    EXPECT_EQ(m(1, 0), fib_recursive({2, n - 2}));
    EXPECT_EQ(m(1, 1), fib_recursive({2, n - 1}));
  }
  PolyMatrix m = cassini_matrix(3, 4);
  EXPECT_EQ(m(0, 0), MPoly::one(3));
  EXPECT_EQ(m(0, 1), x(3, 1));
  EXPECT_EQ(m(0, 2), x(3, 1).pow(2) + x(3, 2));
  PolyMatrix m2 = cassini_matrix(2, 2);
  EXPECT_EQ(m2(0, 0), MPoly::one(2));
  EXPECT_EQ(m2(0, 1), x(2, 1));
  EXPECT_TRUE(m2(1, 0).is_zero());
  EXPECT_EQ(m2(1, 1), MPoly::one(2));
  EXPECT_THROW(cassini_matrix(3, 3), std::invalid_argument);
}

TEST(Cassini, Examples) {
  auto r34 = cassini_check(3, 4);
  EXPECT_TRUE(r34.holds);
  EXPECT_EQ(poly_determinant(cassini_matrix(3, 4)), MPoly::one(3));
  EXPECT_TRUE(cassini_check(4, 10).holds);
  EXPECT_THROW(cassini_check(4, 5), std::invalid_argument);
}

TEST(Cassini, ClassicalFibonacciNumbers) {
  // f_{n-1}^2 - f_n f_{n-2} = (-1)^n at x = (1, 1)
  std::vector<Rational> ones = {Rational(1), Rational(1)};
  for (unsigned n = 2; n <= 30; ++n) {
    Rational det = poly_determinant(cassini_matrix(2, n)).evaluate(ones);
    EXPECT_EQ(det, Rational(n % 2 ? -1 : 1));
    BigInt f0 = fibonacci_num(n - 1), f1 = fibonacci_num(n), fm = fibonacci_num(n - 2);
    EXPECT_EQ(det, Rational(f0 * f0 - f1 * fm));
  }
}

TEST(Cassini, HoldsOverRange) {
  for (unsigned r = 2; r <= 5; ++r)
    for (unsigned n = 2 * r - 2; n <= 2 * r + 8; ++n) {
      auto res = cassini_check(r, n);
      EXPECT_TRUE(res.holds) << "r=" << r << " n=" << n << " residual " << res.residual.str();
    }
}

TEST(Cassini, ResidualLocalizesWrongSign) {
  // Flipping the sign convention leaves a nonzero residual equal to twice the rhs.
  MPoly det = poly_determinant(cassini_matrix(3, 5));
  EXPECT_EQ(det + cassini_rhs(3, 5), cassini_rhs(3, 5).scale(Rational(2)));
}

TEST(BellOrdinary, Examples) {
  for (unsigned n = 1; n <= 6; ++n) {
    EXPECT_EQ(bell_partial_ordinary(n, n), x(n, 1).pow(n));
    EXPECT_EQ(bell_partial_ordinary(n, 1), x(n, n));
  }
  EXPECT_EQ(bell_partial_ordinary(4, 2), x(4, 2).pow(2) + (x(4, 1) * x(4, 3)).scale(Rational(2)));
  EXPECT_EQ(bell_complete_ordinary(1), x(1, 1));
  EXPECT_EQ(bell_complete_ordinary(3).str(), "x1^3 + 2*x1*x2 + x3");
  EXPECT_EQ(bell_complete_ordinary(3), fib_recursive({3, 5}));
  EXPECT_THROW(bell_partial_ordinary(3, 4), std::invalid_argument);
  EXPECT_THROW(bell_partial_ordinary(3, 0), std::invalid_argument);
}

TEST(BellOrdinary, CompleteEqualsFibonacciPolynomial) {
  for (unsigned n = 1; n <= 10; ++n) EXPECT_TRUE(bell_ordinary_fib_check(n)) << n;
}

TEST(BellOrdinary, TruncationMatchesLowerRank) {
  for (unsigned n = 1; n <= 10; ++n)
    for (unsigned r = 1; r <= 4; ++r) EXPECT_TRUE(bell_truncation_check(n, r)) << n << "," << r;
}

TEST(BellExponential, Examples) {
  EXPECT_EQ(bell_partial_exponential(4, 2), x(4, 2).pow(2).scale(Rational(3)) + (x(4, 1) * x(4, 3)).scale(Rational(4)));
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(bell_partial_exponential(n, n), x(n, 1).pow(n));
}

TEST(BellExponential, StirlingAtOnes) {
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned k = 1; k <= n; ++k) EXPECT_TRUE(bell_stirling_check(n, k)) << n << "," << k;
}

TEST(BellExponential, FibonacciIdentity) {
  EXPECT_EQ(exp_bell_weighted_sum(3, 3),
            x(3, 1).pow(3).scale(Rational(6)) + (x(3, 1) * x(3, 2)).scale(Rational(12)) + x(3, 3).scale(Rational(6)));
  for (unsigned r = 1; r <= 5; ++r) EXPECT_TRUE(exp_bell_fib_identity_check(1, r));
  EXPECT_TRUE(exp_bell_fib_identity_check(6, 2));
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned r = 1; r <= 4; ++r) EXPECT_TRUE(exp_bell_fib_identity_check(n, r)) << n << "," << r;
}

TEST(FubiniStirling, Examples) {
  EXPECT_TRUE(fubini_stirling_check(1));
  EXPECT_TRUE(fubini_stirling_check(3));
  EXPECT_TRUE(fubini_stirling_check(8));
  EXPECT_EQ(fubini(8), 545835);
  BigInt sum3 = 0;
  for (unsigned k = 1; k <= 3; ++k) sum3 += factorial(k) * stirling2(3, k);
  EXPECT_EQ(sum3, 13);
  EXPECT_THROW(fubini_stirling_check(0), std::invalid_argument);
}
