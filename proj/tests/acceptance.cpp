// Acceptance suite: one PASS/FAIL line per criterion.
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rfib/fibpoly.hpp"
#include "rfib/identities.hpp"
#include "rfib/oracles.hpp"
#include "rfib/series.hpp"
#include "rfib/verify.hpp"

using namespace rfib;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit;  // seconds, 0 = none
  bool expected_pass;
  std::function<Outcome()> body;
};

std::string rn(unsigned r, unsigned n) { return "r=" + std::to_string(r) + " n=" + std::to_string(n); }

MPoly x(std::size_t arity, std::size_t i) { return MPoly::variable(arity, i); }

Outcome cross_path() {
  Outcome o;
  for (unsigned r = 1; r <= 5; ++r)
    for (unsigned n = 0; n <= 25; ++n) {
      const MPoly rec = fib_recursive({r, n});
      o.require(rec.is_canonical(), "non-canonical " + rn(r, n));
      o.require(fib_multinomial({r, n}) == rec, "multinomial " + rn(r, n));
      if (n + 1 >= r) o.require(fib_matrix({r, n}) == rec, "matrix " + rn(r, n));
    }
  return o;
}

Outcome expansion_r3() {
  Outcome o;
  const auto c = fib_genfun_coefficients(3, 3);
  const MPoly want[] = {MPoly::one(3), x(3, 1), x(3, 1).pow(2) + x(3, 2),
                        x(3, 1).pow(3) + (x(3, 1) * x(3, 2)).scale(Rational(2)) + x(3, 3)};
  for (unsigned k = 0; k <= 3; ++k) o.require(c[k] == want[k], "coefficient " + std::to_string(k));
  return o;
}

Outcome cassini() {
  Outcome o;
  for (unsigned r = 2; r <= 5; ++r)
    for (unsigned n = 2 * r - 2; n <= 2 * r + 8; ++n) {
      auto res = cassini_check(r, n);
      o.require(res.holds, rn(r, n) + " residual " + res.residual.str());
    }
  const std::vector<Rational> ones = {Rational(1), Rational(1)};
  for (unsigned n = 2; n <= 30; ++n) {
    const Rational det = poly_determinant(cassini_matrix(2, n)).evaluate(ones);
    o.require(det == Rational(n % 2 ? -1 : 1), "fibonacci numbers n=" + std::to_string(n));
  }
  return o;
}

Outcome partitions() {
  Outcome o;
  for (unsigned r = 1; r <= 5; ++r)
    for (unsigned n = r; n <= 18; ++n) {
      const MPoly p = fib_recursive({r, n});
      o.require(omega(p) == partitions_bounded(n - r + 1, r).members, "omega " + rn(r, n));
      for (const auto& t : p.terms()) o.require(t.coeff == Rational(multinomial(t.exp)), "coefficient " + rn(r, n));
    }
  return o;
}

Outcome homogeneity() {
  Outcome o;
  for (unsigned r = 1; r <= 5; ++r)
    for (unsigned n = r - 1; n <= r + 12; ++n) {
      auto deg = fib_recursive({r, n}).substitute_power_scaling().is_homogeneous();
      o.require(deg && *deg == n - r + 1, rn(r, n));
    }
  return o;
}

Outcome generating_functions() {
  Outcome o;
  for (unsigned r = 1; r <= 4; ++r) {
    const auto c = fib_genfun_coefficients(r, 15);
    for (unsigned n = 0; n <= 15; ++n) o.require(c[n] == fib_recursive({r, n + r - 1}), "r-fib " + rn(r, n));
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  for (int v = 0; v < 20; ++v) {
    std::vector<Rational> c;
    for (int k = 0; k < 10; ++k) c.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
    const auto out = infinite_variate_coefficients(c, 10);
    for (unsigned n = 1; n <= 10; ++n) {
      const std::vector<Rational> pt(c.begin(), c.begin() + n);
      o.require(out[n] == fib_recursive({n, 2 * n - 1}).evaluate(pt),
                "infinite-variate vector " + std::to_string(v) + " n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome pell_identity() {
  Outcome o;
  std::vector<Rational> c;
  for (unsigned k = 1; k <= 12; ++k) c.emplace_back(fibonacci_num(k));
  const auto out = infinite_variate_coefficients(c, 12);
  // Pell numbers by their own recurrence, independent of the library helper
  BigInt p0 = 0, p1 = 1;
  for (unsigned n = 1; n <= 12; ++n) {
    o.require(out[n] == Rational(p1), "n=" + std::to_string(n) + " got " + out[n].str());
    BigInt next = 2 * p1 + p0;
    p0 = p1;
    p1 = next;
  }
  if (o.pass) o.detail = "coefficients equal Pell numbers; the contrary remark does not hold coefficient-wise";
  return o;
}

Outcome fubini_suite() {
  Outcome o;
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned r = 1; r <= 4; ++r)
      o.require(fubini_restricted(n, r) == oracle::fubini_restricted_bruteforce(n, r), "restricted " + rn(r, n));
  o.require(fubini_restricted(3, 2) == 12, "a_3^2");
  o.require(fubini_restricted(8, 8) == 545835, "a_8^8");
  o.require(oracle::fubini_restricted_bruteforce(8, 8) == 545835, "a_8^8 enumeration");
  for (unsigned n = 1; n <= 12; ++n) {
    BigInt sum = 0;
    for (unsigned k = 1; k <= n; ++k) sum += factorial(k) * oracle::set_partition_count(n, k);
    o.require(sum == fubini(n), "stirling sum n=" + std::to_string(n));
  }
  for (unsigned n = 1; n <= 7; ++n)
    for (unsigned r = 1; r <= 4; ++r) {
      const MPoly p = preference_polynomial(n, r);
      const auto table = oracle::preference_ordering_table(n, r);
      o.require(p.size() == table.size(), "preference support " + rn(r, n));
      for (const auto& t : p.terms()) {
        auto it = table.find(PartitionProfile(t.exp));
        o.require(it != table.end() && t.coeff == Rational(it->second), "preference " + rn(r, n));
      }
    }
  return o;
}

Outcome bell_suite() {
  Outcome o;
  for (unsigned n = 1; n <= 10; ++n) o.require(bell_ordinary_fib_check(n), "complete n=" + std::to_string(n));
  for (unsigned n = 1; n <= 10; ++n)
    for (unsigned r = 1; r <= 4; ++r) o.require(bell_truncation_check(n, r), "truncation " + rn(r, n));
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned r = 1; r <= 4; ++r) o.require(exp_bell_fib_identity_check(n, r), "exponential " + rn(r, n));
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned k = 1; k <= n; ++k) {
      const std::vector<Rational> ones(n, Rational(1));
      o.require(bell_partial_exponential(n, k).evaluate(ones) == Rational(oracle::set_partition_count(n, k)),
                "stirling n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  return o;
}

Outcome numeric_binet() {
  Outcome o;
  const auto s = verify::binet_sweep(100, 5, 30, 7);
  o.require(s.first_failure.empty(), s.first_failure);
  o.require(s.accepted == 100, "accepted " + std::to_string(s.accepted));
  o.require(s.degenerate < 0.05 * s.draws, "degenerate " + std::to_string(s.degenerate));
  std::ostringstream d;
  d << std::scientific << std::setprecision(2) << "max errors binet " << s.max_binet_error << ", homogeneous "
    << s.max_homogeneous_error << ", generic " << s.max_generic_error << ", S*sigma " << s.max_identity_defect
    << "; degenerate " << s.degenerate << "/" << s.draws;
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome decay() {
  Outcome o;
  const std::vector<double> p3 = {0.3, 0.3, 0.3}, p2 = {0.1, 0.1};
  o.require(decay_probe(3, p3, 200, 1e-6), "(0.3,0.3,0.3) n_max=200 tol=1e-6");
  o.require(decay_probe(2, p2, 200, 1e-6), "(0.1,0.1) n_max=200 tol=1e-6");
  if (!o.pass) {
    // dominant root of z^3 - 0.3(z^2 + z + 1)
    double lo = 0.5, hi = 1.0;
    for (int i = 0; i < 100; ++i) {
      const double m = 0.5 * (lo + hi);
      (m * m * m - 0.3 * (m * m + m + 1) < 0 ? lo : hi) = m;
    }
    std::ostringstream d;
    d << o.detail << "; dominant root " << std::setprecision(4) << lo << ", and " << lo << "^200 = "
      << std::scientific << std::setprecision(2) << std::pow(lo, 200.0);
    o.detail = d.str();
  }
  return o;
}

struct ProcessResult {
  int code = -1;
  std::string out;
};

ProcessResult run_cli(const std::string& args) {
  ProcessResult res;
  FILE* pipe = popen((std::string(RFIB_CLI_PATH) + " " + args).c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  const int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

Outcome cli_determinism() {
  Outcome o;
  const std::string args = "verify all --max-r 4 --max-n 16 --seed 7";
  const auto a = run_cli(args), b = run_cli(args);
  o.require(a.code == 0, "first run exit " + std::to_string(a.code));
  o.require(b.code == 0, "second run exit " + std::to_string(b.code));
  o.require(!a.out.empty() && a.out == b.out, "reports differ between runs");
  for (const auto& name : verify::identity_names())
    o.require(a.out.find(name) != std::string::npos, "report missing " + name);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "cross-path construction", 10, true, cross_path},
      {2, "r=3 generating function expansion", 0, true, expansion_r3},
      {3, "Cassini determinant identity", 30, true, cassini},
      {4, "partition characterization", 0, true, partitions},
      {5, "power-scaling homogeneity", 0, true, homogeneity},
      {6, "generating functions", 0, true, generating_functions},
      {7, "Pell coefficient identity", 0, true, pell_identity},
      {8, "Fubini suite", 60, true, fubini_suite},
      {9, "Bell suite", 0, true, bell_suite},
      {10, "numeric Binet sweep", 5, true, numeric_binet},
      {11, "decay at n_max=200", 0, false, decay},
      {12, "CLI determinism", 0, true, cli_determinism},
  };
  int passed = 0, unexpected = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit > 0 && secs > c.time_limit) {
      std::ostringstream d;
      d << "took " << secs << " s, limit " << c.time_limit << " s";
      o.require(false, d.str());
    }
    passed += o.pass;
    if (o.pass != c.expected_pass) ++unexpected;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << std::setw(2) << c.id << "] " << c.name << " ("
              << std::fixed << std::setprecision(2) << secs << " s)";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    if (!o.pass && !c.expected_pass) std::cout << " [known failure]";
    std::cout << "\n";
  }
  std::cout << passed << "/" << criteria.size() << " criteria pass, " << unexpected << " unexpected outcome(s)\n";
  return unexpected == 0 ? 0 : 1;
}
