#ifndef RFIB_FIBPOLY_HPP
#define RFIB_FIBPOLY_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rfib/exactnum.hpp"
#include "rfib/mpoly.hpp"
#include "rfib/polymatrix.hpp"

namespace rfib {

/// (r, n) with r >= 1 and n >= 0. Negative indices are rejected, not extended.
struct FibIndex {
  unsigned r;
  unsigned n;

  FibIndex(long long r_, long long n_) : r(0), n(0) {
    if (r_ < 1) throw std::invalid_argument("FibIndex: r must be >= 1, got " + std::to_string(r_));
    if (n_ < 0) throw std::invalid_argument("FibIndex: n must be >= 0, got " + std::to_string(n_));
    r = static_cast<unsigned>(r_);
    n = static_cast<unsigned>(n_);
  }
};

using ProfileSet = std::set<PartitionProfile>;

/// P_weight(maxpart): partitions of `weight` with parts <= maxpart, as profiles of arity maxpart.
struct PartitionSet {
  unsigned weight = 0;
  unsigned maxpart = 1;
  ProfileSet members;

  friend bool operator==(const PartitionSet&, const PartitionSet&) = default;
};

namespace detail {

/// Process-wide table of F_0..F_k per r, extended on demand.
class FibCache {
 public:
  static FibCache& instance() {
    static FibCache cache;
    return cache;
  }

  MPoly get(unsigned r, unsigned n) {
    std::lock_guard lock(mutex_);
    auto& seq = table_[r];
    if (seq.empty()) {
      for (unsigned k = 0; k + 1 < r; ++k) seq.push_back(MPoly::zero(r));
      seq.push_back(MPoly::one(r));
    }
    std::vector<MPoly> vars;
    for (unsigned i = 1; i <= r; ++i) vars.push_back(MPoly::variable(r, i));
    while (seq.size() <= n) {
      const std::size_t k = seq.size();
      MPoly next = MPoly::zero(r);
      for (unsigned i = 1; i <= r; ++i) next += vars[i - 1] * seq[k - i];
      seq.push_back(std::move(next));
    }
    return seq[n];
  }

  void clear() {
    std::lock_guard lock(mutex_);
    table_.clear();
  }

 private:
  std::mutex mutex_;
  std::map<unsigned, std::vector<MPoly>> table_;
};

}  // namespace detail

/// F_n^[r] from the defining recursion (memoized, bottom-up).
inline MPoly fib_recursive(FibIndex idx) { return detail::FibCache::instance().get(idx.r, idx.n); }

/// Same recursion with arbitrary seeds: F_k = initials[k] for k < r.
inline MPoly fib_generic(unsigned r, unsigned n, const std::vector<MPoly>& initials) {
  if (r < 1) throw std::invalid_argument("fib_generic: r must be >= 1");
  if (initials.size() != r)
    throw std::invalid_argument("fib_generic: expected " + std::to_string(r) + " initial values");
  for (const auto& p : initials)
    if (p.arity() != r) throw std::invalid_argument("fib_generic: initial value arity != r");
  if (n < r) return initials[n];
  // window[k] holds F_{m-r+k}
  std::vector<MPoly> window = initials;
  for (unsigned m = r; m <= n; ++m) {
    MPoly next = MPoly::zero(r);
    for (unsigned i = 1; i <= r; ++i) {
      const MPoly& prev = window[r - i];
      if (!prev.is_zero()) next += MPoly::variable(r, i) * prev;
    }
    window.erase(window.begin());
    window.push_back(std::move(next));
  }
  return window.back();
}

/// Top entry of M^{n-r+1} (1, 0, ..., 0)^T for the companion matrix M.
inline MPoly fib_matrix(FibIndex idx) {
  const unsigned r = idx.r;
  if (idx.n + 1 < r) throw std::invalid_argument("fib_matrix: requires n >= r-1");
  std::vector<MPoly> seed(r, MPoly::zero(r));
  seed[0] = MPoly::one(r);
  PolyMatrix power = PolyMatrix::companion(r).pow(idx.n + 1 - r);
  return power.apply(seed)[0];
}

/// Explicit multinomial sum over profiles of weight n-r+1. The loops run
/// alpha_r outermost down to alpha_2, with alpha_1 taking the remainder.
inline MPoly fib_multinomial(FibIndex idx) {
  const unsigned r = idx.r;
  if (idx.n + 1 < r) return MPoly::zero(r);
  const unsigned weight = idx.n + 1 - r;
  std::vector<Term> terms;
  Exponents alpha(r, 0);
  std::function<void(unsigned, unsigned)> loop = [&](unsigned part, unsigned budget) {
    if (part == 1) {
      alpha[0] = budget;
      terms.push_back({alpha, Rational(multinomial(alpha))});
      return;
    }
    for (unsigned a = 0; a * part <= budget; ++a) {
      alpha[part - 1] = a;
      loop(part - 1, budget - a * part);
    }
    alpha[part - 1] = 0;
  };
  loop(r, weight);
  return MPoly::from_terms(r, std::move(terms));
}

/// Profiles read off the support of p. Coefficients must be positive integers.
inline ProfileSet omega(const MPoly& p) {
  ProfileSet out;
  for (const auto& t : p.terms()) {
    if (!t.coeff.is_integer() || t.coeff.sign() < 0)
      throw std::domain_error("omega: coefficient " + t.coeff.str() + " is not a nonnegative integer");
    out.insert(PartitionProfile(t.exp));
  }
  return out;
}

/// Enumerates partitions as non-increasing part lists and converts each to a profile.
inline PartitionSet partitions_bounded(unsigned weight, unsigned maxpart) {
  if (maxpart < 1) throw std::invalid_argument("partitions_bounded: maxpart must be >= 1");
  PartitionSet set{weight, maxpart, {}};
  std::vector<unsigned> parts;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned largest) {
    if (remaining == 0) {
      std::vector<unsigned> m(maxpart, 0);
      for (unsigned p : parts) ++m[p - 1];
      set.members.insert(PartitionProfile(std::move(m)));
      return;
    }
    for (unsigned p = std::min(remaining, largest); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(weight, maxpart);
  return set;
}

/// Number of partitions of `weight` with parts <= maxpart (term count of F_{weight+r-1}^[r]).
inline BigInt partition_count(unsigned weight, unsigned maxpart) {
  std::vector<BigInt> ways(weight + 1, BigInt(0));
  ways[0] = 1;
  for (unsigned part = 1; part <= maxpart; ++part)
    for (unsigned w = part; w <= weight; ++w) ways[w] += ways[w - part];
  return ways[weight];
}

}  // namespace rfib

#endif  // RFIB_FIBPOLY_HPP
