#ifndef RFIB_MPOLY_HPP
#define RFIB_MPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rfib/exactnum.hpp"

namespace rfib {

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

/// Graded lexicographic order: true when a sorts strictly before b in a
/// descending term list (higher total degree first, then lex-larger first).
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

struct Term {
  Exponents exp;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in x_1..x_r over the rationals. The term list is kept
/// in descending grlex order with no zero coefficients, so operator== is
/// structural.
class MPoly {
 public:
  explicit MPoly(std::size_t arity = 1) : arity_(arity) {
    if (arity_ == 0) throw std::invalid_argument("MPoly: arity must be positive");
  }

  static MPoly zero(std::size_t arity) { return MPoly(arity); }
  static MPoly one(std::size_t arity) { return constant(arity, Rational(1)); }

  static MPoly constant(std::size_t arity, Rational c) {
    MPoly p(arity);
    if (!c.is_zero()) p.terms_.push_back({Exponents(arity, 0), std::move(c)});
    return p;
  }

  /// x_i, 1-based.
  static MPoly variable(std::size_t arity, std::size_t i) {
    if (i < 1 || i > arity) throw std::out_of_range("MPoly::variable: index out of range");
    Exponents e(arity, 0);
    e[i - 1] = 1;
    return monomial(std::move(e), Rational(1));
  }

  static MPoly monomial(Exponents exp, Rational coeff) {
    MPoly p(exp.size());
    if (!coeff.is_zero()) p.terms_.push_back({std::move(exp), std::move(coeff)});
    return p;
  }

  /// Builds a canonical polynomial from arbitrary terms: sorts, merges equal
  /// monomials and drops zeros.
  static MPoly from_terms(std::size_t arity, std::vector<Term> terms) {
    std::map<Exponents, Rational, GrlexGreater> acc;
    for (auto& t : terms) {
      if (t.exp.size() != arity) throw std::invalid_argument("MPoly::from_terms: exponent length != arity");
      auto [it, inserted] = acc.try_emplace(std::move(t.exp), t.coeff);
      if (!inserted) it->second += t.coeff;
    }
    return from_map(arity, std::move(acc));
  }

  std::size_t arity() const noexcept { return arity_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].exp) == 0);
  }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::logic_error("MPoly::leading_term: zero polynomial");
    return terms_.front();
  }

  /// Coefficient of the given monomial, zero if absent.
  Rational coefficient(const Exponents& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponents& k) { return GrlexGreater{}(t.exp, k); });
    if (it != terms_.end() && it->exp == e) return it->coeff;
    return Rational(0);
  }

  unsigned degree() const {
    return terms_.empty() ? 0u : total_degree(terms_.front().exp);
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, false); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, true); }

  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    check_arity(a, b, "mul");
    if (a.is_zero() || b.is_zero()) return MPoly(a.arity_);
    std::map<Exponents, Rational, GrlexGreater> acc;
    Exponents e(a.arity_);
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ta.exp[i] + tb.exp[i];
        auto it = acc.find(e);
        if (it == acc.end()) acc.emplace(e, ta.coeff * tb.coeff);
        else it->second += ta.coeff * tb.coeff;
      }
    }
    return from_map(a.arity_, std::move(acc));
  }

  MPoly scale(const Rational& c) const {
    if (c.is_zero()) return MPoly(arity_);
    MPoly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  MPoly pow(unsigned k) const {
    MPoly result = one(arity_);
    MPoly base = *this;
    while (k) {
      if (k & 1u) result *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return result;
  }

  /// Exact substitution x_i := point[i].
  Rational evaluate(std::span<const Rational> point) const {
    if (point.size() != arity_) throw std::invalid_argument("MPoly::evaluate: point length != arity");
    Rational sum(0);
    for (const auto& t : terms_) {
      Rational v = t.coeff;
      for (std::size_t i = 0; i < arity_; ++i)
        for (unsigned k = 0; k < t.exp[i]; ++k) v *= point[i];
      sum += v;
    }
    return sum;
  }

  double evaluate(std::span<const double> point) const {
    if (point.size() != arity_) throw std::invalid_argument("MPoly::evaluate: point length != arity");
    double sum = 0.0;
    for (const auto& t : terms_) {
      double v = t.coeff.to_double();
      for (std::size_t i = 0; i < arity_; ++i)
        for (unsigned k = 0; k < t.exp[i]; ++k) v *= point[i];
      sum += v;
    }
    return sum;
  }

  /// x_i -> x_i^i.
  MPoly substitute_power_scaling() const {
    std::vector<Term> out = terms_;
    for (auto& t : out)
      for (std::size_t i = 0; i < arity_; ++i) t.exp[i] *= static_cast<unsigned>(i + 1);
    return from_terms(arity_, std::move(out));
  }

  /// x_i -> factors[i] * x_i.
  MPoly scale_variables(std::span<const Rational> factors) const {
    if (factors.size() != arity_) throw std::invalid_argument("MPoly::scale_variables: length != arity");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Rational c = t.coeff;
      for (std::size_t i = 0; i < arity_; ++i)
        for (unsigned k = 0; k < t.exp[i]; ++k) c *= factors[i];
      if (!c.is_zero()) out.push_back({t.exp, std::move(c)});
    }
    // Scaling preserves the monomial order, only zeros can appear.
    MPoly r(arity_);
    r.terms_ = std::move(out);
    return r;
  }

  /// Common total degree of all terms, or nullopt. The zero polynomial reports 0.
  std::optional<unsigned> is_homogeneous() const {
    if (terms_.empty()) return 0u;
    unsigned d = total_degree(terms_.front().exp);
    for (const auto& t : terms_)
      if (total_degree(t.exp) != d) return std::nullopt;
    return d;
  }

  /// Lifts into a larger ambient arity by zero-padding exponent vectors.
  MPoly embed(std::size_t new_arity) const {
    if (new_arity < arity_) throw std::invalid_argument("MPoly::embed: cannot shrink arity");
    std::vector<Term> out = terms_;
    for (auto& t : out) t.exp.resize(new_arity, 0);
    // Zero-padding keeps relative grlex order.
    MPoly r(new_arity);
    r.terms_ = std::move(out);
    return r;
  }

  /// Sets x_i := 0 for every i > keep; arity is unchanged.
  MPoly zero_variables_above(std::size_t keep) const {
    MPoly r(arity_);
    for (const auto& t : terms_) {
      bool survives = true;
      for (std::size_t i = keep; i < arity_; ++i)
        if (t.exp[i] != 0) survives = false;
      if (survives) r.terms_.push_back(t);
    }
    return r;
  }

  /// Canonical-form audit: strict descending order, no zeros, right lengths,
  /// reduced coefficients.
  bool is_canonical() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const auto& t = terms_[i];
      if (t.exp.size() != arity_ || t.coeff.is_zero() || !t.coeff.is_canonical()) return false;
      if (i > 0 && !GrlexGreater{}(terms_[i - 1].exp, t.exp)) return false;
    }
    return true;
  }

  /// Text form, e.g. "x1^3 + 2*x1*x2 + x3".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      bool negative = t.coeff.sign() < 0;
      Rational mag = negative ? -t.coeff : t.coeff;
      if (first) os << (negative ? "-" : "");
      else os << (negative ? " - " : " + ");
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < arity_; ++i) {
        if (t.exp[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(i + 1);
        if (t.exp[i] > 1) mono += "^" + std::to_string(t.exp[i]);
      }
      if (mono.empty()) os << mag.str();
      else if (mag == Rational(1)) os << mono;
      else os << mag.str() << "*" << mono;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

 private:
  static void check_arity(const MPoly& a, const MPoly& b, const char* op) {
    if (a.arity_ != b.arity_)
      throw std::invalid_argument(std::string("MPoly::") + op + ": arity mismatch (" +
                                  std::to_string(a.arity_) + " vs " + std::to_string(b.arity_) + ")");
  }

  static MPoly from_map(std::size_t arity, std::map<Exponents, Rational, GrlexGreater>&& acc) {
    MPoly p(arity);
    p.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
      if (!c.is_zero()) p.terms_.push_back({e, std::move(c)});
    return p;
  }

  static MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
    check_arity(a, b, subtract ? "sub" : "add");
    MPoly r(a.arity_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    GrlexGreater before;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && before(ia->exp, ib->exp))) {
        r.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || before(ib->exp, ia->exp)) {
        r.terms_.push_back({ib->exp, subtract ? -ib->coeff : ib->coeff});
        ++ib;
      } else {
        Rational c = subtract ? ia->coeff - ib->coeff : ia->coeff + ib->coeff;
        if (!c.is_zero()) r.terms_.push_back({ia->exp, std::move(c)});
        ++ia;
        ++ib;
      }
    }
    return r;
  }

  std::size_t arity_;
  std::vector<Term> terms_;
};

/// Quotient a / b when b is known to divide a exactly. Multivariate long
/// division on leading terms; throws std::domain_error if a remainder appears.
inline MPoly divide_exact(const MPoly& a, const MPoly& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("divide_exact: arity mismatch");
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
  const std::size_t r = a.arity();
  std::map<Exponents, Rational, GrlexGreater> rem;
  for (const auto& t : a.terms()) rem.emplace(t.exp, t.coeff);
  const Term& lead = b.leading_term();
  std::vector<Term> quotient;
  Exponents e(r);
  while (!rem.empty()) {
    auto top = rem.begin();
    for (std::size_t i = 0; i < r; ++i) {
      if (top->first[i] < lead.exp[i]) throw std::domain_error("divide_exact: not divisible");
      e[i] = top->first[i] - lead.exp[i];
    }
    Rational c = top->second / lead.coeff;
    Exponents shifted(r);
    for (const auto& t : b.terms()) {
      for (std::size_t i = 0; i < r; ++i) shifted[i] = t.exp[i] + e[i];
      auto it = rem.find(shifted);
      if (it == rem.end()) {
        rem.emplace(shifted, -(c * t.coeff));
      } else {
        it->second -= c * t.coeff;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
    quotient.push_back({e, std::move(c)});
  }
  // Quotient terms are produced in strictly descending order.
  return MPoly::from_terms(r, std::move(quotient));
}

}  // namespace rfib

#endif  // RFIB_MPOLY_HPP
