#ifndef RFIB_JSON_IO_HPP
#define RFIB_JSON_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rfib/exactnum.hpp"
#include "rfib/fibpoly.hpp"
#include "rfib/mpoly.hpp"

namespace rfib {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return q.str(); }

/// {"arity": r, "terms": [{"exp": [...], "coeff": "p/q"}, ...]} in canonical order.
inline Json to_json(const MPoly& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) terms.push_back(Json{{"exp", t.exp}, {"coeff", t.coeff.str()}});
  return Json{{"arity", p.arity()}, {"terms", std::move(terms)}};
}

inline MPoly mpoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("arity") || !j.contains("terms"))
    throw std::invalid_argument("mpoly_from_json: expected object with 'arity' and 'terms'");
  const auto arity = j.at("arity").get<std::size_t>();
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    auto exp = t.at("exp").get<Exponents>();
    const auto& c = t.at("coeff");
    Rational coeff = c.is_string() ? Rational::parse(c.get<std::string>()) : Rational(c.get<long long>());
    terms.push_back({std::move(exp), std::move(coeff)});
  }
  return MPoly::from_terms(arity, std::move(terms));
}

/// {"weight": w, "maxpart": r, "profiles": [[a_1..a_r], ...]}, profiles sorted lexicographically.
inline Json to_json(const PartitionSet& s) {
  Json profiles = Json::array();
  for (const auto& p : s.members) profiles.push_back(p.multiplicities);
  return Json{{"weight", s.weight}, {"maxpart", s.maxpart}, {"profiles", std::move(profiles)}};
}

/// Series as an array indexed by power of z.
template <class Coeff>
Json series_to_json(const std::vector<Coeff>& coeffs) {
  Json out = Json::array();
  for (const auto& c : coeffs) out.push_back(to_json(c));
  return out;
}

}  // namespace rfib

#endif  // RFIB_JSON_IO_HPP
