#ifndef RFIB_CLI_HPP
#define RFIB_CLI_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rfib/exactnum.hpp"
#include "rfib/fibpoly.hpp"
#include "rfib/identities.hpp"
#include "rfib/json_io.hpp"
#include "rfib/mpoly.hpp"
#include "rfib/numeric_binet.hpp"
#include "rfib/series.hpp"
#include "rfib/verify.hpp"

namespace rfib::cli {

enum class Format { text, json, csv };

/// Parsed command line. Bounds: r <= 8, symbolic n <= 500.
struct RunConfig {
  std::string command;
  std::vector<std::string> targets;  // verify: identity names or "all"
  unsigned r = 2;
  unsigned n = 0;
  unsigned n_max = 10;
  unsigned k = 0;
  std::string at;
  unsigned order = 10;
  Format format = Format::text;
  std::uint64_t seed = 7;
  unsigned max_r = 4;
  unsigned max_n = 16;
  std::optional<unsigned> max_block;
  std::string method = "recursive";
  std::string kind = "ordinary";
};

inline constexpr unsigned kMaxR = 8;
inline constexpr unsigned kMaxSymbolicN = 500;
inline constexpr unsigned kMaxVerifyN = 40;
/// Refuse constructions whose term count (partitions of n-r+1 into parts <= r) exceeds this.
inline constexpr unsigned kMaxTerms = 200000;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::exception& e) {
      throw UsageError(std::string("--at: ") + e.what());
    }
  }
  return out;
}

inline std::vector<double> to_doubles(const std::vector<Rational>& v) {
  std::vector<double> out;
  for (const auto& q : v) out.push_back(q.to_double());
  return out;
}

inline std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

inline void require_r(unsigned r) {
  if (r < 1 || r > kMaxR) throw UsageError("--r must be in [1, " + std::to_string(kMaxR) + "]");
}

inline void require_symbolic(unsigned r, unsigned n) {
  require_r(r);
  if (n > kMaxSymbolicN) throw UsageError("--n must be <= " + std::to_string(kMaxSymbolicN));
  if (n + 1 >= r && partition_count(n + 1 - r, r) > kMaxTerms)
    throw UsageError("F_" + std::to_string(n) + "^[" + std::to_string(r) + "] would have more than " +
                     std::to_string(kMaxTerms) + " terms");
}

inline MPoly construct(const RunConfig& c) {
  require_symbolic(c.r, c.n);
  if (c.method == "recursive") return fib_recursive({c.r, c.n});
  if (c.method == "multinomial") return fib_multinomial({c.r, c.n});
  if (c.method == "matrix") {
    if (c.n + 1 < c.r) throw UsageError("--method matrix requires n >= r-1");
    return fib_matrix({c.r, c.n});
  }
  if (c.method == "genfun") {
    if (c.n + 1 < c.r) return MPoly::zero(c.r);
    return fib_genfun_coefficients(c.r, c.n + 1 - c.r).back();
  }
  throw UsageError("unknown --method '" + c.method + "'");
}

inline std::vector<Rational> require_point(const RunConfig& c, std::size_t length) {
  auto point = parse_point(c.at);
  if (point.size() != length)
    throw UsageError("--at needs " + std::to_string(length) + " comma-separated values, got " +
                     std::to_string(point.size()));
  return point;
}

inline std::string join_point(const std::vector<Rational>& p, char sep) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? std::string(1, sep) : "") + p[i].str();
  return s;
}

}  // namespace detail

inline int cmd_fib(const RunConfig& c, std::ostream& out) {
  MPoly p = detail::construct(c);
  if (c.format == Format::json)
    out << Json{{"r", c.r}, {"n", c.n}, {"method", c.method}, {"poly", to_json(p)}}.dump() << "\n";
  else
    out << p.str() << "\n";
  return 0;
}

inline int cmd_fib_eval(const RunConfig& c, std::ostream& out) {
  detail::require_symbolic(c.r, c.n);
  auto point = detail::require_point(c, c.r);
  Rational v = fib_recursive({c.r, c.n}).evaluate(point);
  if (c.format == Format::json)
    out << Json{{"r", c.r}, {"n", c.n}, {"at", detail::join_point(point, ',')}, {"value", v.str()}}.dump() << "\n";
  else
    out << v.str() << "\n";
  return 0;
}

inline int cmd_table(const RunConfig& c, std::ostream& out) {
  detail::require_symbolic(c.r, c.n_max);
  std::vector<Rational> point;
  if (!c.at.empty()) point = detail::require_point(c, c.r);
  Json rows = Json::array();
  if (c.format == Format::csv) out << (point.empty() ? "n,polynomial\n" : "n,value\n");
  for (unsigned n = 0; n <= c.n_max; ++n) {
    MPoly p = fib_recursive({c.r, n});
    std::string cell = point.empty() ? p.str() : p.evaluate(point).str();
    switch (c.format) {
      case Format::csv: out << n << "," << cell << "\n"; break;
      case Format::json:
        rows.push_back(point.empty() ? Json{{"n", n}, {"poly", to_json(p)}} : Json{{"n", n}, {"value", cell}});
        break;
      case Format::text: out << "F_" << n << " = " << cell << "\n"; break;
    }
  }
  if (c.format == Format::json) out << rows.dump() << "\n";
  return 0;
}

/// Without --at: coefficients of the r-Fibonacci generating function.
/// With --at c_1,...: coefficients of g/(1-g) for g = sum c_k z^k.
inline int cmd_series(const RunConfig& c, std::ostream& out) {
  if (c.order > kMaxSymbolicN) throw UsageError("--order too large");
  if (c.at.empty()) {
    detail::require_symbolic(c.r, c.order + c.r - 1);
    auto coeffs = fib_genfun_coefficients(c.r, c.order);
    if (c.format == Format::json) {
      out << series_to_json(coeffs).dump() << "\n";
    } else {
      for (std::size_t k = 0; k < coeffs.size(); ++k) out << "z^" << k << ": " << coeffs[k].str() << "\n";
    }
    return 0;
  }
  auto cs = detail::parse_point(c.at);
  if (cs.size() < c.order)
    throw UsageError("--at needs at least --order (" + std::to_string(c.order) + ") coefficients");
  auto coeffs = infinite_variate_coefficients(cs, c.order);
  if (c.format == Format::json) {
    out << series_to_json(coeffs).dump() << "\n";
  } else {
    for (std::size_t k = 0; k < coeffs.size(); ++k) out << "z^" << k << ": " << coeffs[k].str() << "\n";
  }
  return 0;
}

inline int cmd_bell(const RunConfig& c, std::ostream& out) {
  if (c.n < 1) throw UsageError("--n must be >= 1");
  if (partition_count(c.n, c.n) > kMaxTerms) throw UsageError("--n too large for Bell polynomial expansion");
  MPoly p(1);
  if (c.kind == "ordinary") p = c.k == 0 ? bell_complete_ordinary(c.n) : bell_partial_ordinary(c.n, c.k);
  else if (c.kind == "exponential") {
    if (c.k == 0) throw UsageError("--kind exponential needs --k");
    p = bell_partial_exponential(c.n, c.k);
  } else throw UsageError("unknown --kind '" + c.kind + "'");
  if (c.format == Format::json) out << to_json(p).dump() << "\n";
  else out << p.str() << "\n";
  return 0;
}

inline int cmd_fubini(const RunConfig& c, std::ostream& out) {
  if (c.n > kMaxSymbolicN) throw UsageError("--n too large");
  BigInt v;
  if (c.max_block && *c.max_block == 0) throw UsageError("--max-block must be >= 1");
  if (!c.max_block || *c.max_block >= c.n) {
    v = fubini(c.n);
  } else {
    detail::require_symbolic(*c.max_block, c.n + *c.max_block - 1);
    v = fubini_restricted(c.n, *c.max_block);
  }
  out << v.str() << "\n";
  return 0;
}

inline int cmd_stirling(const RunConfig& c, std::ostream& out) {
  if (c.n > kMaxSymbolicN) throw UsageError("--n too large");
  out << stirling2(c.n, c.k).str() << "\n";
  return 0;
}

/// CSV: r,n,point,method,value,reference,relative_error. Points are ';'-separated.
inline int cmd_binet(const RunConfig& c, std::ostream& out) {
  detail::require_symbolic(c.r, c.n);
  auto exact_point = detail::require_point(c, c.r);
  auto point = detail::to_doubles(exact_point);
  const double reference = fib_recursive({c.r, c.n}).evaluate(exact_point).to_double();
  std::vector<double> seeds(c.r, 0.0);
  seeds[c.r - 1] = 1.0;
  struct Row {
    std::string method;
    double value;
  };
  std::vector<Row> rows;
  const auto roots = numeric::char_roots(c.r, point);
  rows.push_back({"binet", numeric::binet_eval(c.r, c.n, point).real()});
  if (c.n + 1 >= c.r) rows.push_back({"homogeneous_sum", numeric::homogeneous_sum_eval(c.r, c.n, roots).real()});
  rows.push_back({"generic_binet", numeric::generic_binet_eval(c.r, c.n, point, seeds).real()});
  const std::string pt = detail::join_point(exact_point, ';');
  if (c.format == Format::json) {
    Json arr = Json::array();
    for (const auto& row : rows)
      arr.push_back(Json{{"r", c.r}, {"n", c.n}, {"point", pt}, {"method", row.method}, {"value", row.value},
                         {"reference", reference},
                         {"relative_error", std::abs(row.value - reference) / (1.0 + std::abs(reference))}});
    out << arr.dump() << "\n";
    return 0;
  }
  out << "r,n,point,method,value,reference,relative_error\n";
  for (const auto& row : rows)
    out << c.r << "," << c.n << "," << pt << "," << row.method << "," << detail::fmt_double(row.value) << ","
        << detail::fmt_double(reference) << ","
        << detail::fmt_double(std::abs(row.value - reference) / (1.0 + std::abs(reference))) << "\n";
  return 0;
}

inline int cmd_cassini(const RunConfig& c, std::ostream& out) {
  detail::require_r(c.r);
  if (c.r < 2 || c.r > 6) throw UsageError("cassini: --r must be in [2, 6]");
  if (c.n + 2 < 2 * c.r) throw UsageError("cassini: requires n >= 2r-2");
  if (c.n > 2 * c.r + 40) throw UsageError("cassini: --n too large");
  auto res = cassini_check(c.r, c.n);
  if (c.format == Format::json) {
    Json j{{"identity", "cassini"}, {"params", Json{{"r", c.r}, {"n", c.n}}}, {"holds", res.holds}};
    j["residual"] = res.holds ? Json(nullptr) : to_json(res.residual);
    out << j.dump() << "\n";
  } else {
    out << (res.holds ? "holds" : "FAILS") << ": det = " << cassini_rhs(c.r, c.n).str();
    if (!res.holds) out << " (residual " << res.residual.str() << ")";
    out << "\n";
  }
  return res.holds ? 0 : 1;
}

inline int cmd_verify(const RunConfig& c, std::ostream& out) {
  if (c.max_r < 1 || c.max_r > kMaxR) throw UsageError("--max-r must be in [1, " + std::to_string(kMaxR) + "]");
  if (c.max_n > kMaxVerifyN) throw UsageError("--max-n must be <= " + std::to_string(kMaxVerifyN));
  std::vector<std::string> names;
  const auto known = verify::identity_names();
  if (c.targets.empty() || (c.targets.size() == 1 && c.targets[0] == "all")) {
    names = known;
  } else {
    for (const auto& t : c.targets) {
      if (std::find(known.begin(), known.end(), t) == known.end()) throw UsageError("unknown identity '" + t + "'");
      names.push_back(t);
    }
  }
  verify::Options opts{c.max_r, c.max_n, c.seed};
  auto reports = verify::run(names, opts);
  bool all = true;
  for (const auto& r : reports) all = all && r.holds;
  if (c.format == Format::json) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(verify::to_json(r));
    out << Json{{"max_r", c.max_r}, {"max_n", c.max_n}, {"seed", c.seed}, {"reports", arr}, {"all_hold", all}}.dump(2)
        << "\n";
  } else {
    for (const auto& r : reports) {
      out << (r.holds ? "PASS " : "FAIL ") << r.identity << " (" << r.cases << " cases)";
      if (!r.holds) out << " first failure: " << r.detail;
      out << "\n";
    }
    out << (all ? "all identities hold" : "some identities FAILED") << "\n";
  }
  return all ? 0 : 1;
}

inline int run(const RunConfig& c, std::ostream& out) {
  if (c.command == "fib") return cmd_fib(c, out);
  if (c.command == "fib-eval") return cmd_fib_eval(c, out);
  if (c.command == "table") return cmd_table(c, out);
  if (c.command == "series") return cmd_series(c, out);
  if (c.command == "bell") return cmd_bell(c, out);
  if (c.command == "fubini") return cmd_fubini(c, out);
  if (c.command == "stirling") return cmd_stirling(c, out);
  if (c.command == "binet") return cmd_binet(c, out);
  if (c.command == "cassini") return cmd_cassini(c, out);
  if (c.command == "verify") return cmd_verify(c, out);
  throw UsageError("unknown command '" + c.command + "'");
}

/// Parses argv and runs. Exit codes: 0 ok, 1 identity failure or numeric
/// error, 2 usage error.
inline int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and identity verification for r-Fibonacci polynomials", "rfib"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format: text, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_rn = [&](CLI::App* sub) {
    sub->add_option("--r", cfg.r, "Number of variables r")->required();
    sub->add_option("--n", cfg.n, "Index n")->required();
  };

  auto* fib = app.add_subcommand("fib", "Construct F_n^[r]");
  add_rn(fib);
  fib->add_option("--method", cfg.method, "recursive, matrix, multinomial or genfun");
  add_common(fib);

  auto* fib_eval = app.add_subcommand("fib-eval", "Evaluate F_n^[r] exactly at a rational point");
  add_rn(fib_eval);
  fib_eval->add_option("--at", cfg.at, "Comma-separated rationals p/q")->required();
  add_common(fib_eval);

  auto* table = app.add_subcommand("table", "Tabulate F_0..F_{n-max}");
  table->add_option("--r", cfg.r)->required();
  table->add_option("--n-max", cfg.n_max)->required();
  table->add_option("--at", cfg.at, "Optional evaluation point");
  add_common(table);

  auto* series = app.add_subcommand("series", "Generating-function coefficients");
  series->add_option("--r", cfg.r);
  series->add_option("--order", cfg.order)->required();
  series->add_option("--at", cfg.at, "c_1,c_2,... for g/(1-g)");
  add_common(series);

  auto* bell = app.add_subcommand("bell", "Bell polynomials");
  bell->add_option("--n", cfg.n)->required();
  bell->add_option("--k", cfg.k, "Partial polynomial index (omit for complete ordinary)");
  bell->add_option("--kind", cfg.kind, "ordinary or exponential");
  add_common(bell);

  auto* fub = app.add_subcommand("fubini", "Fubini numbers, optionally restricted by block size");
  fub->add_option("--n", cfg.n)->required();
  fub->add_option("--max-block", cfg.max_block, "Largest allowed block size");
  add_common(fub);

  auto* stir = app.add_subcommand("stirling", "Stirling numbers of the second kind");
  stir->add_option("--n", cfg.n)->required();
  stir->add_option("--k", cfg.k)->required();
  add_common(stir);

  auto* binet = app.add_subcommand("binet", "Floating-point Binet evaluation");
  add_rn(binet);
  binet->add_option("--at", cfg.at)->required();
  add_common(binet);

  auto* cassini = app.add_subcommand("cassini", "Check the Cassini determinant identity");
  add_rn(cassini);
  add_common(cassini);

  auto* verify_cmd = app.add_subcommand("verify", "Run the identity verification suite");
  verify_cmd->add_option("targets", cfg.targets, "'all' or identity names");
  verify_cmd->add_option("--max-r", cfg.max_r);
  verify_cmd->add_option("--max-n", cfg.max_n);
  verify_cmd->add_option("--seed", cfg.seed);
  add_common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  // Numeric reports default to csv.
  if (cfg.command == "binet" && binet->count("--format") == 0) cfg.format = Format::csv;

  try {
    return run(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace rfib::cli

#endif  // RFIB_CLI_HPP
