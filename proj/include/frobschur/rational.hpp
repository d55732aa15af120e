#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "frobschur/errors.hpp"

namespace frobschur {

using Integer = mpz_class;
using Rational = mpq_class;

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

/// Parses `p/q`, `p` (optionally signed). The result is canonical.
inline Rational parse_rational(std::string_view text) {
  auto s = detail::trim(text);
  auto slash = s.find('/');
  auto num = s.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!detail::is_integer_text(num) || !detail::is_integer_text(den) || den.front() == '-' ||
      den.front() == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  std::string n(num.front() == '+' ? num.substr(1) : num);
  Integer d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(Integer(n), d);
  r.canonicalize();
  return r;
}

/// n/d in lowest terms (mpq_class(n, d) alone does not reduce).
inline Rational frac(long n, long d) {
  if (d == 0) throw DomainError("zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline Rational frac(const Integer& n, const Integer& d) {
  if (d == 0) throw DomainError("zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Comma-separated list of rationals; empty text is the empty list.
inline std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  auto s = detail::trim(text);
  if (s.empty()) return out;
  for (auto tok : detail::split(s, ',')) out.push_back(parse_rational(tok));
  return out;
}

inline Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return r;
}

/// n(n-1)...(n-m+1); the empty product is 1.
inline Integer falling_factorial(const Integer& n, long m) {
  Integer r = 1;
  for (long k = 0; k < m; ++k) r *= n - k;
  return r;
}

inline Rational pow(const Rational& base, long exponent) {
  Rational r = 1;
  for (long k = 0; k < exponent; ++k) r *= base;
  return r;
}

/// Elementary symmetric polynomials e_0..e_max of a finite vector.
inline std::vector<Rational> elementary_values(const std::vector<Rational>& vars, int max_degree) {
  std::vector<Rational> e(static_cast<std::size_t>(max_degree) + 1, Rational(0));
  e[0] = 1;
  for (const auto& v : vars)
    for (int k = max_degree; k >= 1; --k) e[k] += v * e[k - 1];
  return e;
}

/// Complete homogeneous polynomials h_0..h_max of a finite vector.
inline std::vector<Rational> complete_values(const std::vector<Rational>& vars, int max_degree) {
  std::vector<Rational> h(static_cast<std::size_t>(max_degree) + 1, Rational(0));
  h[0] = 1;
  for (const auto& v : vars)
    for (int k = 1; k <= max_degree; ++k) h[k] += v * h[k - 1];
  return h;
}

}  // namespace frobschur
