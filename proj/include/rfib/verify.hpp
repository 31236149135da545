#ifndef RFIB_VERIFY_HPP
#define RFIB_VERIFY_HPP

// The identity verification suite shared by the `verify` subcommand and the
// acceptance tests. Every check is exact except numeric_binet and decay.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rfib/exactnum.hpp"
#include "rfib/fibpoly.hpp"
#include "rfib/identities.hpp"
#include "rfib/json_io.hpp"
#include "rfib/mpoly.hpp"
#include "rfib/numeric_binet.hpp"
#include "rfib/oracles.hpp"
#include "rfib/series.hpp"

namespace rfib::verify {

struct Options {
  unsigned max_r = 4;
  unsigned max_n = 16;
  std::uint64_t seed = 7;
};

struct Report {
  Report(std::string name, Json parameters = Json::object())
      : identity(std::move(name)), params(std::move(parameters)) {}

  std::string identity;
  Json params = Json::object();
  bool holds = true;
  std::optional<MPoly> residual;  // first nonzero residual, when one exists
  unsigned cases = 0;
  std::string detail;  // first failing case, human readable

  void fail(std::string what, std::optional<MPoly> res = std::nullopt) {
    if (holds) {
      detail = std::move(what);
      residual = std::move(res);
    }
    holds = false;
  }

  /// Records one case; keeps the first failure.
  void check(bool ok, const std::string& what, std::optional<MPoly> res = std::nullopt) {
    ++cases;
    if (!ok) fail(what, std::move(res));
  }
};

inline Json to_json(const Report& r) {
  Json j{{"identity", r.identity}, {"params", r.params}, {"holds", r.holds}};
  j["residual"] = r.residual ? rfib::to_json(*r.residual) : Json(nullptr);
  j["cases"] = r.cases;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

inline std::string case_name(unsigned r, unsigned n) {
  return "r=" + std::to_string(r) + " n=" + std::to_string(n);
}

/// fib_recursive, fib_matrix and fib_multinomial agree exactly.
inline Report cross_path_construction(unsigned max_r, unsigned max_n) {
  Report rep{"cross_path_construction", Json{{"max_r", max_r}, {"max_n", max_n}}};
  for (unsigned r = 1; r <= max_r; ++r)
    for (unsigned n = 0; n <= max_n; ++n) {
      MPoly rec = fib_recursive({r, n});
      MPoly mult = fib_multinomial({r, n});
      rep.check(rec == mult, "multinomial " + case_name(r, n), rec - mult);
      if (n + 1 >= r) {
        MPoly mat = fib_matrix({r, n});
        rep.check(rec == mat, "matrix " + case_name(r, n), rec - mat);
      }
    }
  return rep;
}

/// First four generating-function coefficients for r = 3 match the written expansion.
inline Report genfun_expansion() {
  Report rep{"genfun_expansion_r3", Json{{"r", 3}, {"order", 3}}};
  const auto coeffs = fib_genfun_coefficients(3, 3);
  auto x = [](std::size_t i) { return MPoly::variable(3, i); };
  const std::vector<MPoly> expected = {MPoly::one(3), x(1), x(1) * x(1) + x(2),
                                       x(1) * x(1) * x(1) + (x(1) * x(2)).scale(Rational(2)) + x(3)};
  for (std::size_t k = 0; k < expected.size(); ++k)
    rep.check(coeffs[k] == expected[k], "coefficient " + std::to_string(k), coeffs[k] - expected[k]);
  return rep;
}

/// det of the Cassini window equals (-1)^{n(r+1)} x_r^{n-2r+2}; r = 2 numeric form too.
inline Report cassini(unsigned max_r, unsigned span) {
  Report rep{"cassini", Json{{"r_range", Json::array({2, max_r})}, {"n_range", "[2r-2, 2r+" + std::to_string(span) + "]"}}};
  for (unsigned r = 2; r <= max_r; ++r)
    for (unsigned n = 2 * r - 2; n <= 2 * r + span; ++n) {
      auto res = cassini_check(r, n);
      rep.check(res.holds, case_name(r, n), res.residual);
    }
  return rep;
}

/// r = 2 at x = (1, 1): f_{n-1}^2 - f_n f_{n-2} = (-1)^n, and f_{n-1} f_{n+1} - f_n^2 = (-1)^n.
inline Report cassini_fibonacci(unsigned max_n) {
  Report rep{"cassini_fibonacci_numbers", Json{{"max_n", max_n}}};
  const std::vector<Rational> ones = {Rational(1), Rational(1)};
  for (unsigned n = 2; n <= max_n; ++n) {
    const Rational sign(n % 2 == 0 ? 1 : -1);
    Rational det = poly_determinant(cassini_matrix(2, n)).evaluate(ones);
    rep.check(det == sign, "window n=" + std::to_string(n));
    BigInt classic = fibonacci_num(n - 1) * fibonacci_num(n + 1) - fibonacci_num(n) * fibonacci_num(n);
    rep.check(Rational(classic) == sign, "classic n=" + std::to_string(n));
  }
  return rep;
}

/// Omega(F_n^[r]) = P_{n-r+1}(r) and every coefficient is its profile's multinomial.
inline Report partition_characterization(unsigned max_r, unsigned max_n) {
  Report rep{"partition_characterization", Json{{"max_r", max_r}, {"max_n", max_n}}};
  for (unsigned r = 1; r <= max_r; ++r)
    for (unsigned n = r; n <= max_n; ++n) {
      MPoly f = fib_recursive({r, n});
      rep.check(omega(f) == partitions_bounded(n - r + 1, r).members, "support " + case_name(r, n));
      bool coeffs_ok = true;
      for (const auto& t : f.terms())
        if (t.coeff != Rational(multinomial(t.exp))) coeffs_ok = false;
      rep.check(coeffs_ok, "multinomial coefficients " + case_name(r, n));
    }
  return rep;
}

/// F_n^[r](x_1, x_2^2, ..., x_r^r) is homogeneous of degree n-r+1.
inline Report homogeneity(unsigned max_r, unsigned extra) {
  Report rep{"power_scaling_homogeneity", Json{{"max_r", max_r}, {"n_range", "[r-1, r+" + std::to_string(extra) + "]"}}};
  for (unsigned r = 1; r <= max_r; ++r)
    for (unsigned n = r - 1; n <= r + extra; ++n) {
      auto deg = fib_recursive({r, n}).substitute_power_scaling().is_homogeneous();
      rep.check(deg && *deg == n - r + 1, "homogeneity " + case_name(r, n));
    }
  return rep;
}

/// Coefficient n of 1/(1 - sum x_i z^i) is F_{n+r-1}^[r].
inline Report genfun_fib(unsigned max_r, unsigned order) {
  Report rep{"genfun_r_fibonacci", Json{{"max_r", max_r}, {"order", order}}};
  for (unsigned r = 1; r <= max_r; ++r) {
    auto coeffs = fib_genfun_coefficients(r, order);
    for (unsigned n = 0; n <= order; ++n) {
      MPoly f = fib_recursive({r, n + r - 1});
      rep.check(coeffs[n] == f, "coefficient " + case_name(r, n), coeffs[n] - f);
    }
  }
  return rep;
}

inline std::vector<Rational> random_rationals(std::mt19937_64& rng, std::size_t count) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
  return out;
}

/// Coefficient n of g/(1-g) equals F_{2n-1}^[n](c_1..c_n) on random rational c.
inline Report genfun_infinite_variate(unsigned order, unsigned vectors, std::uint64_t seed) {
  Report rep{"genfun_infinite_variate", Json{{"order", order}, {"vectors", vectors}, {"seed", seed}}};
  std::mt19937_64 rng(seed);
  for (unsigned v = 0; v < vectors; ++v) {
    auto c = random_rationals(rng, order);
    auto coeffs = infinite_variate_coefficients(c, order);
    for (unsigned n = 1; n <= order; ++n) {
      Rational expected = fib_recursive({n, 2 * n - 1}).evaluate(std::span<const Rational>(c.data(), n));
      rep.check(coeffs[n] == expected, "vector " + std::to_string(v) + " n=" + std::to_string(n));
    }
  }
  return rep;
}

/// With Fibonacci inputs, coefficient n of g/(1-g) is the Pell number p_n.
inline Report pell_coefficients(unsigned max_n) {
  Report rep{"pell_coefficients", Json{{"max_n", max_n}}};
  std::vector<Rational> fib;
  for (unsigned k = 1; k <= max_n; ++k) fib.emplace_back(fibonacci_num(k));
  auto coeffs = infinite_variate_coefficients(fib, max_n);
  for (unsigned n = 1; n <= max_n; ++n) {
    rep.check(coeffs[n] == Rational(pell(n)), "series n=" + std::to_string(n));
    Rational direct = fib_recursive({n, 2 * n - 1}).evaluate(std::span<const Rational>(fib.data(), n));
    rep.check(direct == Rational(pell(n)), "evaluation n=" + std::to_string(n));
  }
  return rep;
}

/// a_n^r from the polynomial equals brute-force enumeration; a_n^n = a_n.
inline Report fubini_restricted_suite(unsigned max_n, unsigned max_r, unsigned max_full) {
  Report rep{"fubini_restricted", Json{{"max_n", max_n}, {"max_r", max_r}, {"max_full_n", max_full}}};
  for (unsigned n = 0; n <= max_n; ++n)
    for (unsigned r = 1; r <= max_r; ++r)
      rep.check(fubini_restricted(n, r) == oracle::fubini_restricted_bruteforce(n, r), case_name(r, n));
  for (unsigned n = 1; n <= max_full; ++n) rep.check(fubini_restricted(n, n) == fubini(n), "full n=" + std::to_string(n));
  return rep;
}

/// sum k! S(n,k) = a_n (and the F_{2n-1}^[n](1/k!) route).
inline Report fubini_stirling(unsigned max_n) {
  Report rep{"fubini_stirling", Json{{"max_n", max_n}}};
  for (unsigned n = 1; n <= max_n; ++n) rep.check(fubini_stirling_check(n), "n=" + std::to_string(n));
  return rep;
}

/// Coefficients of n! F_{n+r-1}^[r](x_1, x_2/2!, ...) count preference orderings by profile.
inline Report preference_orderings(unsigned max_n, unsigned max_r) {
  Report rep{"preference_polynomial", Json{{"max_n", max_n}, {"max_r", max_r}}};
  for (unsigned n = 1; n <= max_n; ++n)
    for (unsigned r = 1; r <= max_r; ++r) {
      auto table = oracle::preference_ordering_table(n, r);
      std::vector<Term> terms;
      for (const auto& [profile, count] : table) terms.push_back({profile.multiplicities, Rational(count)});
      MPoly expected = MPoly::from_terms(r, std::move(terms));
      MPoly got = preference_polynomial(n, r);
      rep.check(got == expected, case_name(r, n), got - expected);
    }
  return rep;
}

inline Report bell_ordinary(unsigned max_n) {
  Report rep{"bell_ordinary_complete", Json{{"max_n", max_n}}};
  for (unsigned n = 1; n <= max_n; ++n) rep.check(bell_ordinary_fib_check(n), "n=" + std::to_string(n));
  return rep;
}

inline Report bell_truncation(unsigned max_n, unsigned max_r) {
  Report rep{"bell_ordinary_truncation", Json{{"max_n", max_n}, {"max_r", max_r}}};
  for (unsigned n = 1; n <= max_n; ++n)
    for (unsigned r = 1; r <= max_r; ++r) rep.check(bell_truncation_check(n, r), case_name(r, n));
  return rep;
}

inline Report bell_exponential(unsigned max_n, unsigned max_r) {
  Report rep{"bell_exponential_fib", Json{{"max_n", max_n}, {"max_r", max_r}}};
  for (unsigned n = 1; n <= max_n; ++n)
    for (unsigned r = 1; r <= max_r; ++r) rep.check(exp_bell_fib_identity_check(n, r), case_name(r, n));
  return rep;
}

inline Report bell_stirling(unsigned max_n) {
  Report rep{"bell_exponential_stirling", Json{{"max_n", max_n}}};
  for (unsigned n = 1; n <= max_n; ++n)
    for (unsigned k = 1; k <= n; ++k)
      rep.check(bell_stirling_check(n, k), "n=" + std::to_string(n) + " k=" + std::to_string(k));
  return rep;
}

/// Outcome of the seeded floating-point Binet sweep.
struct BinetSweep {
  unsigned draws = 0;
  unsigned accepted = 0;
  unsigned degenerate = 0;
  double max_binet_error = 0.0;        // relative to 1 + |exact|
  double max_homogeneous_error = 0.0;  // binet vs homogeneous sum, relative to 1 + |binet|
  double max_generic_error = 0.0;      // generic form vs numeric recursion
  double max_identity_defect = 0.0;    // max |S sigma - I|
  std::string first_failure;
};

inline constexpr double kBinetTolerance = 1e-8;

/// Seeded sweep: r in 1..max_r, n in 0..max_n, coordinates p/1000 in [0.2, 2].
inline BinetSweep binet_sweep(unsigned points, unsigned max_r, unsigned max_n, std::uint64_t seed) {
  BinetSweep s;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> pick_r(1, max_r);
  std::uniform_int_distribution<unsigned> pick_n(0, max_n);
  std::uniform_int_distribution<int> pick_coord(200, 2000);
  std::uniform_int_distribution<int> pick_seed(-1000, 1000);
  auto note = [&](const std::string& what) {
    if (s.first_failure.empty()) s.first_failure = what;
  };
  while (s.accepted < points) {
    ++s.draws;
    const unsigned r = pick_r(rng);
    const unsigned n = pick_n(rng);
    std::vector<Rational> exact_point;
    std::vector<double> point;
    std::vector<double> seeds;
    for (unsigned i = 0; i < r; ++i) {
      const int p = pick_coord(rng);
      exact_point.emplace_back(BigInt(p), BigInt(1000));
      point.push_back(p / 1000.0);
      seeds.push_back(pick_seed(rng) / 1000.0);
    }
    if (s.draws > 20 * points) {
      note("too many degenerate draws");
      break;
    }
    try {
      const auto roots = numeric::char_roots(r, point);
      const double exact = fib_recursive({r, n}).evaluate(exact_point).to_double();
      const double binet = numeric::binet_eval(r, n, point).real();
      const double e1 = std::abs(binet - exact) / (1.0 + std::abs(exact));
      s.max_binet_error = std::max(s.max_binet_error, e1);
      if (!(e1 <= kBinetTolerance)) note("binet " + case_name(r, n));
      if (n + 1 >= r) {
        const double hom = numeric::homogeneous_sum_eval(r, n, roots).real();
        const double e2 = std::abs(hom - binet) / (1.0 + std::abs(binet));
        s.max_homogeneous_error = std::max(s.max_homogeneous_error, e2);
        if (!(e2 <= kBinetTolerance)) note("homogeneous " + case_name(r, n));
      }
      const double generic = numeric::generic_binet_eval(r, n, point, seeds).real();
      const double reference = numeric::numeric_recursion(point, seeds, n);
      const double e3 = std::abs(generic - reference) / (1.0 + std::abs(reference));
      s.max_generic_error = std::max(s.max_generic_error, e3);
      if (!(e3 <= kBinetTolerance)) note("generic " + case_name(r, n));
      const double defect = numeric::identity_defect(roots);
      s.max_identity_defect = std::max(s.max_identity_defect, defect);
      if (!(defect < kBinetTolerance)) note("S*sigma " + case_name(r, n));
      ++s.accepted;
    } catch (const numeric::DegenerateSpectrum&) {
      ++s.degenerate;
    }
  }
  return s;
}

inline bool sweep_holds(const BinetSweep& s, unsigned points) {
  return s.first_failure.empty() && s.accepted == points &&
         static_cast<double>(s.degenerate) < 0.05 * static_cast<double>(s.draws);
}

inline Report numeric_binet(unsigned points, unsigned max_r, unsigned max_n, std::uint64_t seed) {
  BinetSweep s = binet_sweep(points, max_r, max_n, seed);
  Report rep{"numeric_binet",
             Json{{"points", points}, {"max_r", max_r}, {"max_n", max_n}, {"seed", seed},
                  {"tolerance", kBinetTolerance}}};
  rep.cases = s.accepted;
  rep.params["draws"] = s.draws;
  rep.params["degenerate"] = s.degenerate;
  if (!s.first_failure.empty()) rep.fail(s.first_failure);
  if (!sweep_holds(s, points)) rep.fail("degenerate spectra exceeded 5% of draws");
  return rep;
}

struct DecayCase {
  std::vector<double> point;
  unsigned n_max;
  double tolerance;
};

inline Report decay(const std::vector<DecayCase>& cases) {
  Report rep{"decay", Json{{"cases", cases.size()}}};
  Json list = Json::array();
  for (const auto& c : cases) {
    const bool ok = decay_probe(static_cast<unsigned>(c.point.size()), c.point, c.n_max, c.tolerance);
    list.push_back(Json{{"point", c.point}, {"n_max", c.n_max}, {"tolerance", c.tolerance}, {"holds", ok}});
    rep.check(ok, "r=" + std::to_string(c.point.size()) + " n_max=" + std::to_string(c.n_max));
  }
  rep.params["probes"] = std::move(list);
  return rep;
}

/// Names accepted by run_named(); "all" runs every entry in order.
inline std::vector<std::string> identity_names() {
  return {"cross_path_construction", "genfun_expansion_r3", "cassini", "cassini_fibonacci_numbers",
          "partition_characterization", "power_scaling_homogeneity", "genfun_r_fibonacci",
          "genfun_infinite_variate", "pell_coefficients", "fubini_restricted", "fubini_stirling",
          "preference_polynomial", "bell_ordinary_complete", "bell_ordinary_truncation",
          "bell_exponential_fib", "bell_exponential_stirling", "numeric_binet", "decay"};
}

/// Runs a single named identity with bounds derived from the options.
/// Oracle-backed checks are capped at desk scale regardless of max_n.
inline Report run_named(const std::string& name, const Options& o) {
  const unsigned R = o.max_r;
  const unsigned N = o.max_n;
  if (name == "cross_path_construction") return cross_path_construction(R, N);
  if (name == "genfun_expansion_r3") return genfun_expansion();
  if (name == "cassini") return cassini(std::clamp(R, 2u, 5u), 8);
  if (name == "cassini_fibonacci_numbers") return cassini_fibonacci(std::max(N, 2u));
  if (name == "partition_characterization") return partition_characterization(R, N);
  if (name == "power_scaling_homogeneity") return homogeneity(R, 12);
  if (name == "genfun_r_fibonacci") return genfun_fib(R, N);
  if (name == "genfun_infinite_variate") return genfun_infinite_variate(std::min(N, 10u), 20, o.seed);
  if (name == "pell_coefficients") return pell_coefficients(std::min(N, 12u));
  if (name == "fubini_restricted") return fubini_restricted_suite(std::min(N, 8u), R, std::min(N, 10u));
  if (name == "fubini_stirling") return fubini_stirling(std::min(N, 12u));
  if (name == "preference_polynomial") return preference_orderings(std::min(N, 7u), R);
  if (name == "bell_ordinary_complete") return bell_ordinary(std::min(N, 10u));
  if (name == "bell_ordinary_truncation") return bell_truncation(std::min(N, 10u), R);
  if (name == "bell_exponential_fib") return bell_exponential(std::min(N, 8u), R);
  if (name == "bell_exponential_stirling") return bell_stirling(std::min(N, 8u));
  if (name == "numeric_binet") return numeric_binet(100, std::min(R, 5u), 30, o.seed);
  if (name == "decay")
    // The 0.3 probe needs about 400 steps before the tail drops below 1e-6.
    return decay({{{0.3, 0.3, 0.3}, 400, 1e-6}, {{0.1, 0.1}, 200, 1e-6}});
  throw std::invalid_argument("unknown identity '" + name + "'");
}

/// Runs the named identities concurrently; results come back in request order.
inline std::vector<Report> run(const std::vector<std::string>& names, const Options& o) {
  std::vector<std::future<Report>> pending;
  pending.reserve(names.size());
  for (const auto& name : names) pending.push_back(std::async(std::launch::async, run_named, name, o));
  std::vector<Report> out;
  out.reserve(names.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

}  // namespace rfib::verify

#endif  // RFIB_VERIFY_HPP
