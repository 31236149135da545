#ifndef RFIB_SERIES_HPP
#define RFIB_SERIES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "rfib/exactnum.hpp"
#include "rfib/fibpoly.hpp"
#include "rfib/mpoly.hpp"

namespace rfib {

namespace detail {
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline MPoly zero_like(const MPoly& p) { return MPoly::zero(p.arity()); }
inline MPoly one_like(const MPoly& p) { return MPoly::one(p.arity()); }
}  // namespace detail

/// Power series in z truncated after z^order. Coeff is Rational or MPoly.
template <class Coeff>
class TruncatedSeries {
 public:
  /// Takes coefficients of z^0..z^order; the vector must be non-empty.
  explicit TruncatedSeries(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: needs at least one coefficient");
    if constexpr (std::is_same_v<Coeff, MPoly>) {
      for (const auto& c : coeffs_)
        if (c.arity() != coeffs_[0].arity()) throw std::invalid_argument("TruncatedSeries: mixed arities");
    }
  }

  /// Zero-pads or cuts a short coefficient list to exactly order + 1 entries.
  static TruncatedSeries with_order(std::vector<Coeff> coeffs, std::size_t order, const Coeff& zero) {
    coeffs.resize(order + 1, zero);
    return TruncatedSeries(std::move(coeffs));
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<Coeff>& coefficients() const noexcept { return coeffs_; }
  const Coeff& operator[](std::size_t k) const { return coeffs_.at(k); }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// Cauchy product truncated at the smaller order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Coeff> out(order + 1, detail::zero_like(a.coeffs_[0]));
    for (std::size_t i = 0; i <= order; ++i)
      for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return TruncatedSeries(std::move(out));
  }

  /// b with a*b = 1 + O(z^{order+1}); b_0 = 1, b_n = -sum_{k=1..n} a_k b_{n-k}.
  TruncatedSeries reciprocal() const {
    const Coeff one = detail::one_like(coeffs_[0]);
    if (!(coeffs_[0] == one)) throw std::domain_error("TruncatedSeries::reciprocal: constant term must be 1");
    std::vector<Coeff> b;
    b.reserve(coeffs_.size());
    b.push_back(one);
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
      Coeff acc = detail::zero_like(one);
      for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * b[n - k];
      b.push_back(detail::zero_like(one) - acc);
    }
    return TruncatedSeries(std::move(b));
  }

 private:
  std::vector<Coeff> coeffs_;
};

template <class Coeff>
TruncatedSeries<Coeff> series_mul(const TruncatedSeries<Coeff>& a, const TruncatedSeries<Coeff>& b) {
  return a * b;
}

template <class Coeff>
TruncatedSeries<Coeff> series_reciprocal(const TruncatedSeries<Coeff>& a) {
  return a.reciprocal();
}

/// Coefficients 0..order of 1 / (1 - x_1 z - ... - x_r z^r).
inline std::vector<MPoly> fib_genfun_coefficients(unsigned r, std::size_t order) {
  if (r < 1) throw std::invalid_argument("fib_genfun_coefficients: r must be >= 1");
  std::vector<MPoly> denom(order + 1, MPoly::zero(r));
  denom[0] = MPoly::one(r);
  for (unsigned i = 1; i <= r && i <= order; ++i) denom[i] = -MPoly::variable(r, i);
  return TruncatedSeries<MPoly>(std::move(denom)).reciprocal().coefficients();
}

/// Coefficients of g / (1 - g) for g = sum_{k=1..order} c_k z^k, indexed by
/// power of z (entry 0 is the zero constant term). c[0] holds c_1.
inline std::vector<Rational> infinite_variate_coefficients(std::span<const Rational> c, std::size_t order) {
  if (c.size() < order)
    throw std::invalid_argument("infinite_variate_coefficients: need " + std::to_string(order) +
                                " coefficients, got " + std::to_string(c.size()));
  std::vector<Rational> one_minus_g(order + 1);
  one_minus_g[0] = Rational(1);
  for (std::size_t k = 1; k <= order; ++k) one_minus_g[k] = -c[k - 1];
  // g/(1-g) = 1/(1-g) - 1
  auto out = TruncatedSeries<Rational>(std::move(one_minus_g)).reciprocal().coefficients();
  out[0] = Rational(0);
  return out;
}

/// n! F_{n+r-1}^[r](x_1, x_2/2!, ..., x_r/r!): coefficient of x^alpha counts
/// preference orderings with alpha_i blocks of size i.
inline MPoly preference_polynomial(unsigned n, unsigned r) {
  if (n < 1 || r < 1) throw std::invalid_argument("preference_polynomial: requires n, r >= 1");
  std::vector<Rational> factors;
  for (unsigned i = 1; i <= r; ++i) factors.emplace_back(BigInt(1), factorial(i));
  return fib_recursive({r, n + r - 1}).scale_variables(factors).scale(Rational(factorial(n)));
}

/// a_n^r = n! F_{n+r-1}^[r](1, 1/2!, ..., 1/r!).
inline BigInt fubini_restricted(unsigned n, unsigned r) {
  if (r < 1) throw std::invalid_argument("fubini_restricted: r must be >= 1");
  std::vector<Rational> point;
  for (unsigned i = 1; i <= r; ++i) point.emplace_back(BigInt(1), factorial(i));
  Rational v = fib_recursive({r, n + r - 1}).evaluate(point) * Rational(factorial(n));
  if (!v.is_integer()) throw std::logic_error("fubini_restricted: non-integral value " + v.str());
  return v.num();
}

/// Float recursion at a point with sum |x_i| < 1; true when |F_m| < tolerance
/// for every m in the final quarter [ceil(3 n_max / 4), n_max].
inline bool decay_probe(unsigned r, std::span<const double> point, unsigned n_max, double tolerance) {
  if (r < 1 || point.size() != r) throw std::invalid_argument("decay_probe: point length must equal r >= 1");
  double l1 = 0.0;
  for (double v : point) l1 += std::abs(v);
  if (!(l1 < 1.0))
    throw std::domain_error("decay_probe: hypothesis sum |x_i| < 1 violated (sum = " + std::to_string(l1) + ")");
  std::vector<double> seq(r, 0.0);
  seq[r - 1] = 1.0;
  while (seq.size() <= n_max) {
    double next = 0.0;
    for (unsigned i = 1; i <= r; ++i) next += point[i - 1] * seq[seq.size() - i];
    seq.push_back(next);
  }
  const unsigned start = (3 * n_max + 3) / 4;
  for (unsigned m = start; m <= n_max; ++m)
    if (!(std::abs(seq[m]) < tolerance)) return false;
  return true;
}

}  // namespace rfib

#endif  // RFIB_SERIES_HPP
