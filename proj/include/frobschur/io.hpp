#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "frobschur/errors.hpp"
#include "frobschur/partition.hpp"
#include "frobschur/rational.hpp"
#include "frobschur/ribbon.hpp"
#include "frobschur/symfunc.hpp"

namespace frobschur {

using json = nlohmann::json;

/// [{"partition": [..], "coeff": "p/q"}, ...] in the same order as the text form.
inline json coefficients_to_json(const std::map<Partition, Rational>& coeffs) {
  std::vector<std::pair<Partition, Rational>> terms(coeffs.begin(), coeffs.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return graded_less(b.first, a.first); });
  json out = json::array();
  for (const auto& [mu, c] : terms) out.push_back({{"partition", mu.vec()}, {"coeff", to_string(c)}});
  return out;
}

inline json to_json(const SymFunc& f) {
  const SymFunc s = f.to_schur();
  return coefficients_to_json(s.terms());
}

inline std::map<Partition, Rational> coefficients_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected a JSON array of {partition, coeff} terms");
  std::map<Partition, Rational> out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("partition") || !term.contains("coeff"))
      throw ParseError("JSON term needs 'partition' and 'coeff'");
    std::vector<int> parts;
    try {
      parts = term.at("partition").get<std::vector<int>>();
    } catch (const json::exception&) {
      throw ParseError("JSON 'partition' must be an array of integers");
    }
    Partition mu;
    try {
      mu = Partition(parts);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
    const auto& c = term.at("coeff");
    Rational value = c.is_string() ? parse_rational(c.get<std::string>())
                     : c.is_number_integer() ? Rational(static_cast<long>(c.get<long long>()))
                                             : throw ParseError("JSON 'coeff' must be a rational string");
    out[mu] += value;
  }
  return out;
}

inline SymFunc symfunc_from_json(const json& j) { return SymFunc(Basis::schur, coefficients_from_json(j)); }

/// Accepts either the JSON schema or the `s[..]` text form.
inline SymFunc parse_symfunc_any(const std::string& text) {
  auto t = detail::trim(text);
  if (!t.empty() && t.front() == '[') {
    try {
      return symfunc_from_json(json::parse(t));
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what());
    }
  }
  return parse_symfunc(t);
}

/// [{"du": int, "dv": int, "coeff": "p/q"}, ...] by decreasing (du, dv).
inline json to_json(const BivariatePoly& p) {
  json out = json::array();
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it)
    out.push_back({{"du", it->first.first}, {"dv", it->first.second}, {"coeff", to_string(it->second)}});
  return out;
}

}  // namespace frobschur
