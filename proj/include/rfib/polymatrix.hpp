#ifndef RFIB_POLYMATRIX_HPP
#define RFIB_POLYMATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rfib/mpoly.hpp"

namespace rfib {

/// Square matrix of polynomials sharing one arity. Row-major.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t dim, std::size_t arity)
      : dim_(dim), arity_(arity), entries_(dim * dim, MPoly::zero(arity)) {
    if (dim == 0) throw std::invalid_argument("PolyMatrix: dimension must be positive");
  }

  static PolyMatrix identity(std::size_t dim, std::size_t arity) {
    PolyMatrix m(dim, arity);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = MPoly::one(arity);
    return m;
  }

  /// First row (x_1, ..., x_r), ones on the subdiagonal.
  static PolyMatrix companion(std::size_t r) {
    PolyMatrix m(r, r);
    for (std::size_t j = 0; j < r; ++j) m(0, j) = MPoly::variable(r, j + 1);
    for (std::size_t i = 1; i < r; ++i) m(i, i - 1) = MPoly::one(r);
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t arity() const noexcept { return arity_; }

  MPoly& operator()(std::size_t i, std::size_t j) { return entries_.at(i * dim_ + j); }
  const MPoly& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * dim_ + j); }

  /// Replaces an entry, checking that it lives in the matrix's ring.
  void set(std::size_t i, std::size_t j, MPoly p) {
    if (p.arity() != arity_) throw std::invalid_argument("PolyMatrix::set: arity mismatch");
    (*this)(i, j) = std::move(p);
  }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.dim_ != b.dim_ || a.arity_ != b.arity_) throw std::invalid_argument("PolyMatrix::mul: shape mismatch");
    PolyMatrix c(a.dim_, a.arity_);
    for (std::size_t i = 0; i < a.dim_; ++i)
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const MPoly& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < a.dim_; ++j)
          if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  /// Column vector product.
  std::vector<MPoly> apply(const std::vector<MPoly>& v) const {
    if (v.size() != dim_) throw std::invalid_argument("PolyMatrix::apply: length mismatch");
    std::vector<MPoly> out(dim_, MPoly::zero(arity_));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  /// Binary exponentiation.
  PolyMatrix pow(unsigned long e) const {
    PolyMatrix result = identity(dim_, arity_);
    PolyMatrix base = *this;
    while (e) {
      if (e & 1ul) result = result * base;
      e >>= 1ul;
      if (e) base = base * base;
    }
    return result;
  }

 private:
  std::size_t dim_;
  std::size_t arity_;
  std::vector<MPoly> entries_;
};

/// Laplace expansion along the first row. Exponential; used for small
/// dimensions and as the cross-check for elimination.
inline MPoly cofactor_determinant(const PolyMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  MPoly det = MPoly::zero(m.arity());
  for (std::size_t col = 0; col < n; ++col) {
    if (m(0, col).is_zero()) continue;
    PolyMatrix minor(n - 1, m.arity());
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, mj = 0; j < n; ++j) {
        if (j == col) continue;
        minor(i - 1, mj++) = m(i, j);
      }
    MPoly term = m(0, col) * cofactor_determinant(minor);
    if (col % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

/// Fraction-free (Bareiss) elimination. Every division is exact in the
/// polynomial ring, so entries stay polynomial throughout.
inline MPoly bareiss_determinant(PolyMatrix m) {
  const std::size_t n = m.dim();
  bool negate = false;
  MPoly prev = MPoly::one(m.arity());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return MPoly::zero(m.arity());
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = k == 0 ? std::move(num) : divide_exact(num, prev);
      }
      m(i, k) = MPoly::zero(m.arity());
    }
    prev = m(k, k);
  }
  MPoly det = m(n - 1, n - 1);
  return negate ? -det : det;
}

/// Exact determinant: cofactor expansion up to dimension 4, Bareiss above.
inline MPoly poly_determinant(const PolyMatrix& m) {
  return m.dim() <= 4 ? cofactor_determinant(m) : bareiss_determinant(m);
}

}  // namespace rfib

#endif  // RFIB_POLYMATRIX_HPP
