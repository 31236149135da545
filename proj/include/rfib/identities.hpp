#ifndef RFIB_IDENTITIES_HPP
#define RFIB_IDENTITIES_HPP

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rfib/exactnum.hpp"
#include "rfib/fibpoly.hpp"
#include "rfib/mpoly.hpp"
#include "rfib/polymatrix.hpp"

namespace rfib {

/// r x r window with entry (i, j) = F_{n-r+1-i+j} (0-based); the top row ends at F_n.
inline PolyMatrix cassini_matrix(unsigned r, unsigned n) {
  if (r < 1) throw std::invalid_argument("cassini_matrix: r must be >= 1");
  if (n + 2 < 2 * r) throw std::invalid_argument("cassini_matrix: requires n >= 2r-2");
  PolyMatrix m(r, r);
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; j < r; ++j) m(i, j) = fib_recursive({r, n + 1 - r - i + j});
  return m;
}

/// (-1)^{n(r+1)} x_r^{n-2r+2}
inline MPoly cassini_rhs(unsigned r, unsigned n) {
  if (n + 2 < 2 * r) throw std::invalid_argument("cassini_rhs: requires n >= 2r-2");
  Exponents e(r, 0);
  e[r - 1] = n + 2 - 2 * r;
  const bool odd = (static_cast<unsigned long long>(n) * (r + 1)) % 2 == 1;
  return MPoly::monomial(std::move(e), Rational(odd ? -1 : 1));
}

struct CassiniResult {
  bool holds;
  MPoly residual;
};

/// det(cassini_matrix) - (-1)^{n(r+1)} x_r^{n-2r+2}; holds iff the residual vanishes.
inline CassiniResult cassini_check(unsigned r, unsigned n) {
  MPoly residual = poly_determinant(cassini_matrix(r, n)) - cassini_rhs(r, n);
  const bool holds = residual.is_zero();
  return {holds, std::move(residual)};
}

namespace detail {

/// Partitions of n into exactly k parts, as multiplicity vectors of length n.
inline std::vector<std::vector<unsigned>> partitions_exact_length(unsigned n, unsigned k) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> mult(n, 0);
  std::function<void(unsigned, unsigned, unsigned)> rec = [&](unsigned remaining, unsigned parts_left,
                                                              unsigned largest) {
    if (parts_left == 0) {
      if (remaining == 0) out.push_back(mult);
      return;
    }
    if (remaining < parts_left) return;
    // Each of the remaining parts is at least 1.
    for (unsigned p = std::min(largest, remaining - (parts_left - 1)); p >= 1; --p) {
      if (p * parts_left < remaining) break;
      ++mult[p - 1];
      rec(remaining - p, parts_left - 1, p);
      --mult[p - 1];
    }
  };
  if (k >= 1 && k <= n) rec(n, k, n - k + 1);
  return out;
}

inline void check_bell_range(unsigned n, unsigned k, const char* who) {
  if (k < 1 || k > n)
    throw std::invalid_argument(std::string(who) + ": requires 1 <= k <= n (n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ")");
}

}  // namespace detail

/// Partial ordinary Bell polynomial B^_{n,k}, in ambient arity n.
inline MPoly bell_partial_ordinary(unsigned n, unsigned k) {
  detail::check_bell_range(n, k, "bell_partial_ordinary");
  const BigInt kfact = factorial(k);
  std::vector<Term> terms;
  for (auto& j : detail::partitions_exact_length(n, k)) {
    BigInt denom = 1;
    for (unsigned ji : j) denom *= factorial(ji);
    terms.push_back({std::move(j), Rational(kfact / denom)});
  }
  return MPoly::from_terms(n, std::move(terms));
}

/// Complete ordinary Bell polynomial: sum over k of the partial ones.
inline MPoly bell_complete_ordinary(unsigned n) {
  if (n < 1) throw std::invalid_argument("bell_complete_ordinary: requires n >= 1");
  MPoly sum = MPoly::zero(n);
  for (unsigned k = 1; k <= n; ++k) sum += bell_partial_ordinary(n, k);
  return sum;
}

/// Partial exponential Bell polynomial B_{n,k} with the standard coefficient
/// n! / prod(j_i! (i!)^{j_i}), so that B_{n,k}(1,...,1) = S(n,k).
inline MPoly bell_partial_exponential(unsigned n, unsigned k) {
  detail::check_bell_range(n, k, "bell_partial_exponential");
  const BigInt nfact = factorial(n);
  std::vector<Term> terms;
  for (auto& j : detail::partitions_exact_length(n, k)) {
    BigInt denom = 1;
    for (unsigned i = 0; i < j.size(); ++i) {
      denom *= factorial(j[i]);
      if (j[i] > 0) denom *= boost::multiprecision::pow(factorial(i + 1), j[i]);
    }
    terms.push_back({std::move(j), Rational(nfact / denom)});
  }
  return MPoly::from_terms(n, std::move(terms));
}

/// Left side of the exponential Bell identity:
/// sum_k k! B_{n,k}(1!x_1, 2!x_2, ..., r!x_r, 0, ...), in arity max(n, r).
inline MPoly exp_bell_weighted_sum(unsigned n, unsigned r) {
  if (n < 1 || r < 1) throw std::invalid_argument("exp_bell_weighted_sum: requires n, r >= 1");
  std::vector<Rational> factors(n);
  for (unsigned i = 0; i < n; ++i) factors[i] = Rational(factorial(i + 1));
  MPoly sum = MPoly::zero(n);
  for (unsigned k = 1; k <= n; ++k) {
    MPoly b = bell_partial_exponential(n, k).zero_variables_above(r).scale_variables(factors);
    sum += b.scale(Rational(factorial(k)));
  }
  return sum.embed(std::max(n, r));
}

/// sum_k k! B_{n,k}(1!x_1, ..., r!x_r, 0, ...) == n! F_{n+r-1}^[r].
inline bool exp_bell_fib_identity_check(unsigned n, unsigned r) {
  MPoly lhs = exp_bell_weighted_sum(n, r);
  MPoly rhs = fib_recursive({r, n + r - 1}).scale(Rational(factorial(n))).embed(std::max(n, r));
  return lhs == rhs;
}

/// B^_n == F_{2n-1}^[n].
inline bool bell_ordinary_fib_check(unsigned n) {
  return bell_complete_ordinary(n) == fib_recursive({n, 2 * n - 1});
}

/// B^_n with x_i := 0 for i > r equals F_{n+r-1}^[r], compared in arity max(n, r).
inline bool bell_truncation_check(unsigned n, unsigned r) {
  const std::size_t ambient = std::max(n, r);
  MPoly lhs = bell_complete_ordinary(n).zero_variables_above(r).embed(ambient);
  MPoly rhs = fib_recursive({r, n + r - 1}).embed(ambient);
  return lhs == rhs;
}

/// B_{n,k}(1, ..., 1) == S(n, k).
inline bool bell_stirling_check(unsigned n, unsigned k) {
  std::vector<Rational> ones(n, Rational(1));
  return bell_partial_exponential(n, k).evaluate(ones) == Rational(stirling2(n, k));
}

/// sum_k k! S(n,k) == a_n, and n! F_{2n-1}^[n](1/1!, ..., 1/n!) == a_n.
inline bool fubini_stirling_check(unsigned n) {
  if (n < 1) throw std::invalid_argument("fubini_stirling_check: requires n >= 1");
  const BigInt a = fubini(n);
  BigInt sum = 0;
  for (unsigned k = 1; k <= n; ++k) sum += factorial(k) * stirling2(n, k);
  std::vector<Rational> point;
  for (unsigned i = 1; i <= n; ++i) point.emplace_back(BigInt(1), factorial(i));
  Rational via_fib = fib_recursive({n, 2 * n - 1}).evaluate(point) * Rational(factorial(n));
  return sum == a && via_fib == Rational(a);
}

}  // namespace rfib

#endif  // RFIB_IDENTITIES_HPP
