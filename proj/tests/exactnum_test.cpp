#include <random>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "rfib/exactnum.hpp"
#include "rfib/mpoly.hpp"
#include "rfib/oracles.hpp"

using namespace rfib;

namespace {

BigInt iterated_product(unsigned n) {
  BigInt p = 1;
  for (unsigned k = n; k >= 1; --k) p = p * k;
  return p;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-1000000, 1000000);
  std::uniform_int_distribution<long long> den(1, 5000);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

}  // namespace

TEST(Rational, NormalizesAtConstruction) {
  Rational q(BigInt(6), BigInt(-8));
  EXPECT_EQ(q.num(), -3);
  EXPECT_EQ(q.den(), 4);
  Rational z(BigInt(0), BigInt(-17));
  EXPECT_EQ(z.num(), 0);
  EXPECT_EQ(z.den(), 1);
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST(Rational, Serialization) {
  EXPECT_EQ(Rational(5).str(), "5");
  EXPECT_EQ(Rational(BigInt(-1), BigInt(6)).str(), "-1/6");
  EXPECT_EQ(Rational::parse(" 3/6 "), Rational(BigInt(1), BigInt(2)));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse("0.3"), Rational(BigInt(3), BigInt(10)));
  EXPECT_EQ(Rational::parse("-.25"), Rational(BigInt(-1), BigInt(4)));
  EXPECT_EQ(Rational::parse("010"), Rational(10));
  EXPECT_EQ(Rational::parse("0.05"), Rational(BigInt(1), BigInt(20)));
  EXPECT_THROW(Rational::parse("1/x"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, FromDoubleIsExact) {
  EXPECT_EQ(Rational::from_double(0.5), Rational(BigInt(1), BigInt(2)));
  EXPECT_EQ(Rational::from_double(-3.0), Rational(-3));
  EXPECT_EQ(Rational::from_double(0.1).to_double(), 0.1);
  BigInt big = boost::multiprecision::pow(BigInt(2), 1200);
  EXPECT_EQ(Rational(big * 3, big * 4).to_double(), 0.75);
}

TEST(RationalProperty, ArithmeticStaysCanonical) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng);
    for (const Rational& r : {a + b, a - b, a * b, b.is_zero() ? a : a / b, -a}) EXPECT_TRUE(r.is_canonical());
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(Factorial, Values) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(12), iterated_product(12));
  EXPECT_EQ(factorial(12), 479001600);
}

TEST(Multinomial, Values) {
  EXPECT_EQ(multinomial({0, 0, 0}), 1);
  EXPECT_EQ(multinomial({1, 1, 1}), factorial(3) / (factorial(1) * factorial(1) * factorial(1)));
  EXPECT_EQ(multinomial({1, 1, 1}), 6);
  EXPECT_EQ(multinomial({3, 0, 0}), 1);
  EXPECT_EQ(multinomial({1, 1, 0}), 2);
}

TEST(MultinomialProperty, TimesFactorialsIsFactorialOfSum) {
  // every alpha with sum <= 10 and up to 4 parts
  for (unsigned a = 0; a <= 10; ++a)
    for (unsigned b = 0; a + b <= 10; ++b)
      for (unsigned c = 0; a + b + c <= 10; ++c)
        for (unsigned d = 0; a + b + c + d <= 10; ++d) {
          BigInt lhs = multinomial({a, b, c, d}) * factorial(a) * factorial(b) * factorial(c) * factorial(d);
          ASSERT_EQ(lhs, factorial(a + b + c + d));
        }
}

TEST(Stirling2, AgreesWithSetPartitionEnumeration) {
  EXPECT_EQ(stirling2(0, 0), 1);
  EXPECT_EQ(stirling2(4, 2), oracle::set_partition_count(4, 2));
  EXPECT_EQ(stirling2(4, 2), 7);
  EXPECT_EQ(stirling2(3, 5), 0);
  EXPECT_EQ(stirling2(5, 0), 0);
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(stirling2(n, k), oracle::set_partition_count(n, k)) << n << "," << k;
}

TEST(Stirling2, FallingFactorialBasisReconstructsPower) {
  // x^n = sum_k S(n,k) x(x-1)...(x-k+1), as an exact identity in Q[x].
  const MPoly x = MPoly::variable(1, 1);
  for (unsigned n = 0; n <= 8; ++n) {
    MPoly sum = MPoly::zero(1);
    MPoly falling = MPoly::one(1);
    for (unsigned k = 0; k <= n; ++k) {
      sum += falling.scale(Rational(stirling2(n, k)));
      falling *= x - MPoly::constant(1, Rational(static_cast<int>(k)));
    }
    EXPECT_EQ(sum, x.pow(n)) << "n=" << n;
  }
}

TEST(Fubini, AgreesWithOrderedPartitionEnumeration) {
  EXPECT_EQ(fubini(0), 1);
  EXPECT_EQ(fubini(3), oracle::fubini_restricted_bruteforce(3, 3));
  EXPECT_EQ(fubini(3), 13);
  EXPECT_EQ(fubini(8), oracle::fubini_restricted_bruteforce(8, 8));
  EXPECT_EQ(fubini(8), 545835);
  for (unsigned n = 1; n <= 7; ++n) EXPECT_EQ(fubini(n), oracle::fubini_restricted_bruteforce(n, n));
}

TEST(PellFibonacci, SmallValues) {
  EXPECT_EQ(pell(0), 0);
  EXPECT_EQ(pell(1), 1);
  EXPECT_EQ(pell(4), 12);
  EXPECT_EQ(fibonacci_num(0), 0);
  EXPECT_EQ(fibonacci_num(5), 5);
  for (unsigned n = 2; n < 40; ++n) {
    EXPECT_EQ(pell(n), 2 * pell(n - 1) + pell(n - 2));
    EXPECT_EQ(fibonacci_num(n), fibonacci_num(n - 1) + fibonacci_num(n - 2));
  }
}

TEST(PartitionProfile, WeightAndLength) {
  PartitionProfile p({2, 0, 1});
  EXPECT_EQ(p.weight(), 5u);
  EXPECT_EQ(p.length(), 3u);
  EXPECT_EQ(PartitionProfile().weight(), 0u);
}

TEST(Concurrency, PureFunctionsFromManyThreads) {
  std::vector<std::thread> threads;
  std::vector<BigInt> results(8);
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&results, t] { results[t] = fubini(20) + stirling2(20, 7) + multinomial({3, 4, 5}); });
  for (auto& th : threads) th.join();
  for (const auto& r : results) EXPECT_EQ(r, results[0]);
}
