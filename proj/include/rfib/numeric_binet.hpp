#ifndef RFIB_NUMERIC_BINET_HPP
#define RFIB_NUMERIC_BINET_HPP

// Floating-point spectral evaluation of r-Fibonacci values through the roots
// of z^r - x_1 z^{r-1} - ... - x_r.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rfib::numeric {

using Complex = std::complex<double>;
using ComplexMatrix = std::vector<std::vector<Complex>>;

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonConvergence : public NumericError {
 public:
  using NumericError::NumericError;
};

class DegenerateSpectrum : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Max sweeps of simultaneous iteration.
inline constexpr int kMaxSweeps = 1000;
/// Simultaneous iteration stops once every update is below this (scaled by 1 + |root|).
inline constexpr double kUpdateTolerance = 1e-13;
/// Roots closer than kSeparationFactor * (1 + max|root|) make a spectrum degenerate.
inline constexpr double kSeparationFactor = 1e-6;
/// Acceptable |p(root)| relative to (1 + |root|)^r.
inline constexpr double kResidualTolerance = 1e-10;
/// Imaginary residue allowed on real-input results, relative to 1 + |result|.
inline constexpr double kImaginaryTolerance = 1e-8;

struct ComplexVec {
  std::vector<Complex> values;
  double separation = std::numeric_limits<double>::infinity();

  std::size_t size() const noexcept { return values.size(); }
  const Complex& operator[](std::size_t i) const { return values[i]; }
};

inline Complex ipow(Complex base, unsigned e) {
  Complex result(1.0, 0.0);
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

namespace detail {

/// Coefficients, highest degree first, of z^r - x_1 z^{r-1} - ... - x_r.
inline std::vector<Complex> characteristic(std::span<const double> point) {
  std::vector<Complex> c(point.size() + 1);
  c[0] = 1.0;
  for (std::size_t i = 0; i < point.size(); ++i) c[i + 1] = -point[i];
  return c;
}

struct HornerResult {
  Complex value, deriv, second;
};

inline HornerResult horner(const std::vector<Complex>& c, Complex z) {
  HornerResult h{c[0], 0.0, 0.0};
  for (std::size_t i = 1; i < c.size(); ++i) {
    h.second = h.second * z + h.deriv;
    h.deriv = h.deriv * z + h.value;
    h.value = h.value * z + c[i];
  }
  h.second *= 2.0;
  return h;
}

inline double residual_bound(Complex z, std::size_t degree) {
  return kResidualTolerance * std::pow(1.0 + std::abs(z), static_cast<double>(degree));
}

inline void newton_polish(const std::vector<Complex>& c, std::vector<Complex>& roots) {
  for (auto& z : roots)
    for (int it = 0; it < 3; ++it) {
      auto h = horner(c, z);
      if (h.deriv == Complex(0.0)) break;
      Complex step = h.value / h.deriv;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      z -= step;
    }
}

inline bool residuals_ok(const std::vector<Complex>& c, const std::vector<Complex>& roots) {
  for (const auto& z : roots)
    if (!(std::abs(horner(c, z).value) <= residual_bound(z, c.size() - 1))) return false;
  return true;
}

/// Simultaneous (Weierstrass / Durand-Kerner) iteration from a perturbed circle.
inline bool durand_kerner(const std::vector<Complex>& c, std::vector<Complex>& roots) {
  const std::size_t r = c.size() - 1;
  double radius = 0.0;
  for (std::size_t i = 1; i <= r; ++i)
    radius = std::max(radius, std::pow(std::abs(c[i]), 1.0 / static_cast<double>(i)));
  radius = 2.0 * radius + 0.1;
  roots.resize(r);
  const double kTwoPi = 6.283185307179586;
  for (std::size_t k = 0; k < r; ++k)
    roots[k] = std::polar(radius, kTwoPi * static_cast<double>(k) / static_cast<double>(r) + 0.4);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool converged = true;
    for (std::size_t k = 0; k < r; ++k) {
      Complex denom(1.0, 0.0);
      for (std::size_t j = 0; j < r; ++j)
        if (j != k) denom *= roots[k] - roots[j];
      if (denom == Complex(0.0)) {
        roots[k] += Complex(1e-8, 1e-8);
        converged = false;
        continue;
      }
      Complex update = horner(c, roots[k]).value / denom;
      roots[k] -= update;
      if (std::abs(update) > kUpdateTolerance * (1.0 + std::abs(roots[k]))) converged = false;
    }
    if (converged) return true;
  }
  return false;
}

/// Laguerre iteration for one root of c.
inline Complex laguerre(const std::vector<Complex>& c, Complex z) {
  const double n = static_cast<double>(c.size() - 1);
  for (int it = 0; it < kMaxSweeps; ++it) {
    auto h = horner(c, z);
    if (std::abs(h.value) == 0.0) return z;
    Complex g = h.deriv / h.value;
    Complex g2 = g * g;
    Complex hh = g2 - h.second / h.value;
    Complex sq = std::sqrt((n - 1.0) * (n * hh - g2));
    Complex d1 = g + sq, d2 = g - sq;
    Complex d = std::abs(d1) >= std::abs(d2) ? d1 : d2;
    Complex step = d == Complex(0.0) ? Complex(1.0 + std::abs(z), 0.0) : n / d;
    z -= step;
    if (std::abs(step) <= kUpdateTolerance * (1.0 + std::abs(z))) return z;
  }
  throw NonConvergence("laguerre: no convergence after " + std::to_string(kMaxSweeps) + " iterations");
}

/// One root at a time with synthetic-division deflation.
inline std::vector<Complex> deflation_roots(const std::vector<Complex>& c) {
  std::vector<Complex> work = c;
  std::vector<Complex> roots;
  while (work.size() > 1) {
    Complex z = laguerre(work, Complex(0.0, 0.0));
    roots.push_back(z);
    std::vector<Complex> next(work.size() - 1);
    next[0] = work[0];
    for (std::size_t i = 1; i + 1 < work.size(); ++i) next[i] = work[i] + z * next[i - 1];
    work = std::move(next);
  }
  return roots;
}

}  // namespace detail

inline double min_separation(const std::vector<Complex>& roots) {
  double sep = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) sep = std::min(sep, std::abs(roots[i] - roots[j]));
  return sep;
}

/// Rejects spectra whose roots nearly coincide.
inline void require_distinct(const ComplexVec& roots) {
  double scale = 0.0;
  for (const auto& z : roots.values) scale = std::max(scale, std::abs(z));
  if (roots.separation < kSeparationFactor * (1.0 + scale))
    throw DegenerateSpectrum("degenerate spectrum: min root separation " + std::to_string(roots.separation));
}

/// All roots of z^r - x_1 z^{r-1} - ... - x_r, sorted by (real desc, imag desc).
inline ComplexVec char_roots(std::size_t r, std::span<const double> point) {
  if (r < 1) throw std::invalid_argument("char_roots: r must be >= 1");
  if (point.size() != r) throw std::invalid_argument("char_roots: point length != r");
  for (double v : point)
    if (!std::isfinite(v)) throw std::invalid_argument("char_roots: non-finite coordinate");
  const auto c = detail::characteristic(point);
  std::vector<Complex> roots;
  if (r == 1) {
    roots = {Complex(point[0], 0.0)};
  } else {
    bool ok = detail::durand_kerner(c, roots);
    if (ok) {
      detail::newton_polish(c, roots);
      ok = detail::residuals_ok(c, roots);
    }
    if (!ok) {
      roots = detail::deflation_roots(c);
      detail::newton_polish(c, roots);
      if (!detail::residuals_ok(c, roots))
        throw NonConvergence("char_roots: residual bound not met after deflation fallback");
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  ComplexVec out{std::move(roots), 0.0};
  out.separation = min_separation(out.values);
  require_distinct(out);
  return out;
}

/// Elementary symmetric sums e_0..e_{m} of the given values.
inline std::vector<Complex> elementary_symmetric(const std::vector<Complex>& values) {
  std::vector<Complex> e(values.size() + 1, Complex(0.0));
  e[0] = 1.0;
  for (std::size_t k = 0; k < values.size(); ++k)
    for (std::size_t j = k + 1; j >= 1; --j) e[j] += e[j - 1] * values[k];
  return e;
}

/// S with S_{i,j} = lambda_j^{r-i} (1-based): rows run from the (r-1)th power down to 1.
inline ComplexMatrix vandermonde_matrix(const ComplexVec& roots) {
  const std::size_t r = roots.size();
  ComplexMatrix s(r, std::vector<Complex>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) s[i][j] = ipow(roots[j], static_cast<unsigned>(r - 1 - i));
  return s;
}

/// Inverse of vandermonde_matrix, entry by entry:
///   sigma_{i,1} = 1 / prod_{m != i} (l_i - l_m)
///   sigma_{i,j} = (-1)^{r-j} e_{j-1}(l without l_i) / prod_{m != i} (l_m - l_i),  j > 1
inline ComplexMatrix vandermonde_inverse_sigma(const ComplexVec& roots) {
  require_distinct(roots);
  const std::size_t r = roots.size();
  ComplexMatrix sigma(r, std::vector<Complex>(r));
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Complex> others;
    Complex forward(1.0), backward(1.0);
    for (std::size_t m = 0; m < r; ++m) {
      if (m == i) continue;
      others.push_back(roots[m]);
      forward *= roots[i] - roots[m];
      backward *= roots[m] - roots[i];
    }
    const auto e = elementary_symmetric(others);
    sigma[i][0] = 1.0 / forward;
    for (std::size_t j = 2; j <= r; ++j) {
      const double sign = (r - j) % 2 == 0 ? 1.0 : -1.0;
      sigma[i][j - 1] = sign * e[j - 1] / backward;
    }
  }
  return sigma;
}

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.size();
  ComplexMatrix c(n, std::vector<Complex>(n, Complex(0.0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

/// max |(S sigma)_{ij} - delta_ij|
inline double identity_defect(const ComplexVec& roots) {
  const auto prod = matmul(vandermonde_matrix(roots), vandermonde_inverse_sigma(roots));
  double worst = 0.0;
  for (std::size_t i = 0; i < prod.size(); ++i)
    for (std::size_t j = 0; j < prod.size(); ++j)
      worst = std::max(worst, std::abs(prod[i][j] - Complex(i == j ? 1.0 : 0.0)));
  return worst;
}

/// Throws NumericError when a real-input result carries a non-negligible imaginary part.
inline Complex check_real(Complex z, const char* who) {
  if (!(std::abs(z.imag()) < kImaginaryTolerance * (1.0 + std::abs(z))))
    throw NumericError(std::string(who) + ": imaginary residue " + std::to_string(z.imag()) +
                       " exceeds bound for real input");
  return z;
}

/// sum_i lambda_i^n / prod_{m != i} (lambda_i - lambda_m)
inline Complex binet_eval(std::size_t r, unsigned n, std::span<const double> point) {
  const auto roots = char_roots(r, point);
  Complex sum(0.0);
  for (std::size_t i = 0; i < r; ++i) {
    Complex denom(1.0);
    for (std::size_t m = 0; m < r; ++m)
      if (m != i) denom *= roots[i] - roots[m];
    sum += ipow(roots[i], n) / denom;
  }
  return check_real(sum, "binet_eval");
}

/// Complete homogeneous symmetric sum of the given degree by literal
/// enumeration of exponent compositions. Exponential; small degrees only.
inline Complex homogeneous_sum_enumerate(const std::vector<Complex>& values, unsigned degree) {
  Complex total(0.0);
  std::function<void(std::size_t, unsigned, Complex)> rec = [&](std::size_t idx, unsigned left, Complex acc) {
    if (idx + 1 == values.size()) {
      total += acc * ipow(values[idx], left);
      return;
    }
    Complex power(1.0);
    for (unsigned m = 0; m <= left; ++m) {
      rec(idx + 1, left - m, acc * power);
      power *= values[idx];
    }
  };
  if (values.empty()) return degree == 0 ? Complex(1.0) : Complex(0.0);
  rec(0, degree, Complex(1.0));
  return total;
}

/// h_k(l_1..l_j) = h_k(l_1..l_{j-1}) + l_j h_{k-1}(l_1..l_j), one variable at a time.
inline Complex homogeneous_sum_recurrence(const std::vector<Complex>& values, unsigned degree) {
  std::vector<Complex> h(degree + 1, Complex(0.0));
  h[0] = 1.0;
  for (const auto& v : values)
    for (unsigned k = 1; k <= degree; ++k) h[k] += v * h[k - 1];
  return h[degree];
}

/// sum over m_1 + ... + m_r = n-r+1 of prod lambda_i^{m_i}.
inline Complex homogeneous_sum_eval(std::size_t r, unsigned n, const ComplexVec& roots) {
  if (roots.size() != r) throw std::invalid_argument("homogeneous_sum_eval: root count != r");
  if (n + 1 < r) throw std::invalid_argument("homogeneous_sum_eval: requires n >= r-1");
  const unsigned degree = static_cast<unsigned>(n + 1 - r);
  Complex z = degree <= 6 ? homogeneous_sum_enumerate(roots.values, degree)
                          : homogeneous_sum_recurrence(roots.values, degree);
  return check_real(z, "homogeneous_sum_eval");
}

/// sum_i lambda_i^n sum_j sigma_{i,j} l_{r-j}, with initial_values = (l_0, ..., l_{r-1}).
inline Complex generic_binet_eval(std::size_t r, unsigned n, std::span<const double> point,
                                  std::span<const double> initial_values) {
  if (initial_values.size() != r) throw std::invalid_argument("generic_binet_eval: need r initial values");
  const auto roots = char_roots(r, point);
  const auto sigma = vandermonde_inverse_sigma(roots);
  Complex sum(0.0);
  for (std::size_t i = 0; i < r; ++i) {
    Complex weight(0.0);
    for (std::size_t j = 1; j <= r; ++j) weight += sigma[i][j - 1] * initial_values[r - j];
    sum += ipow(roots[i], n) * weight;
  }
  return check_real(sum, "generic_binet_eval");
}

/// Direct floating-point recursion F_m = sum x_i F_{m-i} from arbitrary seeds.
inline double numeric_recursion(std::span<const double> point, std::span<const double> initial_values,
                                unsigned n) {
  const std::size_t r = point.size();
  if (initial_values.size() != r) throw std::invalid_argument("numeric_recursion: need r initial values");
  std::vector<double> seq(initial_values.begin(), initial_values.end());
  while (seq.size() <= n) {
    double next = 0.0;
    for (std::size_t i = 1; i <= r; ++i) next += point[i - 1] * seq[seq.size() - i];
    seq.push_back(next);
  }
  return seq[n];
}

}  // namespace rfib::numeric

#endif  // RFIB_NUMERIC_BINET_HPP
