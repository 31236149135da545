#ifndef RFIB_EXACTNUM_HPP
#define RFIB_EXACTNUM_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rfib {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction, always stored in lowest terms with a positive denominator.
/// Zero is 0/1, so structural equality is value equality.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  template <std::integral I>
  Rational(I v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt v) : num_(std::move(v)), den_(1) {}  // NOLINT

  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  /// Exact conversion; every finite double is a dyadic rational.
  static Rational from_double(double v);

  /// Parses "p", "-p", "p/q" or a decimal "d.ddd". Whitespace around the value is ignored.
  static Rational parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_.sign(); }

  double to_double() const {
    if (den_ == 1) return num_.convert_to<double>();
    // dividing two converted operands overflows once both exceed the double range
    return boost::multiprecision::cpp_rational(num_, den_).convert_to<double>();
  }

  std::string str() const {
    return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
  }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
      num_ += o.num_;
      return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }

  Rational& operator-=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
      num_ -= o.num_;
      return *this;
    }
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }

  Rational& operator*=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
      num_ *= o.num_;
      return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }

  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    BigInt n = num_ * o.den_;
    BigInt d = den_ * o.num_;
    num_ = std::move(n);
    den_ = std::move(d);
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  /// True when the stored fraction satisfies the canonical-form invariants.
  bool is_canonical() const {
    if (den_ <= 0) return false;
    if (num_ == 0) return den_ == 1;
    return boost::multiprecision::gcd(num_, den_) == 1;
  }

 private:
  void normalize() {
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw std::domain_error("Rational::from_double: non-finite value");
  int exp = 0;
  double mant = std::frexp(v, &exp);
  // 53 significant bits: scale the mantissa to an integer.
  auto m = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  BigInt num = m;
  BigInt den = 1;
  if (exp > 0) num <<= exp;
  else den <<= -exp;
  return Rational(num, den);
}

inline Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [](std::string_view s) -> BigInt {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw std::invalid_argument("Rational::parse: empty integer");
    for (std::size_t j = i; j < s.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j])))
        throw std::invalid_argument("Rational::parse: bad digit in '" + std::string(s) + "'");
    std::string_view body = s.substr(i);
    // cpp_int reads a leading 0 as an octal prefix
    while (body.size() > 1 && body.front() == '0') body.remove_prefix(1);
    BigInt v{std::string(body)};
    return s[0] == '-' ? BigInt(-v) : v;
  };
  text = trim(text);
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    // Decimal literal: digits after the point become a power-of-ten denominator.
    std::string digits(text.substr(0, dot));
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string_view::npos)
      throw std::invalid_argument("Rational::parse: bad decimal '" + std::string(text) + "'");
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    digits += frac;
    BigInt den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    return Rational(parse_int(digits), den);
  }
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(trim(text.substr(0, slash))), parse_int(trim(text.substr(slash + 1))));
}

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt b = 1;
  for (unsigned i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

/// (sum parts)! / prod(parts_i!), built as a product of binomials.
inline BigInt multinomial(const std::vector<unsigned>& parts) {
  BigInt m = 1;
  unsigned total = 0;
  for (unsigned p : parts) {
    total += p;
    m *= binomial(total, p);
  }
  return m;
}

/// Stirling numbers of the second kind by the triangle recurrence.
inline BigInt stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<BigInt> row(k + 1, BigInt(0));
  row[0] = 1;  // S(0,0)
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned j = std::min(m, k); j >= 1; --j) row[j] = BigInt(j) * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

/// Ordered Bell (Fubini) numbers: a_0 = 1, a_n = sum_{k=1..n} C(n,k) a_{n-k}.
inline BigInt fubini(unsigned n) {
  std::vector<BigInt> a(n + 1);
  a[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    a[m] = 0;
    for (unsigned k = 1; k <= m; ++k) a[m] += binomial(m, k) * a[m - k];
  }
  return a[n];
}

namespace detail {
inline BigInt second_order(unsigned n, unsigned a, BigInt s0, BigInt s1) {
  if (n == 0) return s0;
  for (unsigned i = 1; i < n; ++i) {
    BigInt next = BigInt(a) * s1 + s0;
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  return s1;
}
}  // namespace detail

inline BigInt pell(unsigned n) { return detail::second_order(n, 2, 0, 1); }
inline BigInt fibonacci_num(unsigned n) { return detail::second_order(n, 1, 0, 1); }

/// Multiplicity vector (alpha_1, ..., alpha_r) of the partition (1^a1, 2^a2, ..., r^ar).
struct PartitionProfile {
  std::vector<unsigned> multiplicities;

  PartitionProfile() = default;
  explicit PartitionProfile(std::vector<unsigned> m) : multiplicities(std::move(m)) {}

  std::size_t arity() const noexcept { return multiplicities.size(); }

  /// sum i * alpha_i
  unsigned weight() const {
    unsigned w = 0;
    for (std::size_t i = 0; i < multiplicities.size(); ++i)
      w += static_cast<unsigned>(i + 1) * multiplicities[i];
    return w;
  }

  /// Number of parts, sum alpha_i.
  unsigned length() const {
    return std::accumulate(multiplicities.begin(), multiplicities.end(), 0u);
  }

  friend auto operator<=>(const PartitionProfile&, const PartitionProfile&) = default;
};

}  // namespace rfib

#endif  // RFIB_EXACTNUM_HPP
