#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "frobschur/errors.hpp"
#include "frobschur/partition.hpp"
#include "frobschur/rational.hpp"
#include "frobschur/tableaux.hpp"

namespace frobschur {

namespace detail {
inline std::atomic<int>& degree_cap_storage() {
  static std::atomic<int> cap{20};
  return cap;
}
}  // namespace detail

/// Largest degree any SymFunc may reach (Kostka tables grow quickly).
inline int degree_cap() { return detail::degree_cap_storage().load(); }
inline void set_degree_cap(int cap) { detail::degree_cap_storage().store(cap); }

inline void check_degree(int degree) {
  if (degree > degree_cap())
    throw DomainError("degree " + std::to_string(degree) + " exceeds the configured cap " +
                      std::to_string(degree_cap()));
}

enum class Basis { h_monomial, schur };

/// A point (x; y) with finitely many coordinates; the rest are zero.
struct EvalPoint {
  std::vector<Rational> x;
  std::vector<Rational> y;
  bool operator==(const EvalPoint&) const = default;
};

class SymFunc;
namespace detail {
inline const std::map<Partition, Rational>& schur_in_h(const Partition& lambda);
}

/// An element of the ring of symmetric functions with exact rational
/// coefficients. Keys are partitions: in the h-monomial basis a key lambda
/// means h_{lambda_1} h_{lambda_2} ..., in the Schur basis it means s_lambda.
/// Zero coefficients are never stored.
class SymFunc {
 public:
  using Terms = std::map<Partition, Rational>;

  SymFunc() = default;
  SymFunc(Basis basis, Terms terms) : basis_(basis), terms_(std::move(terms)) { prune(); }

  static SymFunc constant(const Rational& c) { return SymFunc(Basis::h_monomial, {{Partition{}, c}}); }
  static SymFunc one() { return constant(1); }
  static SymFunc h_monomial(const Partition& lambda, const Rational& c = 1) {
    return SymFunc(Basis::h_monomial, {{lambda, c}});
  }
  static SymFunc schur(const Partition& mu, const Rational& c = 1) { return SymFunc(Basis::schur, {{mu, c}}); }

  Basis basis() const noexcept { return basis_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// -1 for the zero element.
  int degree() const noexcept {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.size());
    return d;
  }

  Rational coeff(const Partition& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  SymFunc to_schur() const {
    if (basis_ == Basis::schur) return *this;
    Terms out;
    for (const auto& [lambda, c] : terms_) {
      check_degree(lambda.size());
      for (const auto& mu : partitions_of(lambda.size())) {
        Integer k = kostka(mu, lambda);
        if (k != 0) out[mu] += c * Rational(k);
      }
    }
    return SymFunc(Basis::schur, std::move(out));
  }

  SymFunc to_h() const {
    if (basis_ == Basis::h_monomial) return *this;
    Terms out;
    for (const auto& [mu, c] : terms_) {
      check_degree(mu.size());
      for (const auto& [lambda, k] : detail::schur_in_h(mu)) out[lambda] += c * k;
    }
    return SymFunc(Basis::h_monomial, std::move(out));
  }

  SymFunc in_basis(Basis b) const { return b == Basis::schur ? to_schur() : to_h(); }

  /// Homogeneous component of degree d, in the Schur basis.
  SymFunc component(int d) const {
    Terms out;
    const SymFunc s = to_schur();
    for (const auto& [mu, c] : s.terms_)
      if (mu.size() == d) out.emplace(mu, c);
    return SymFunc(Basis::schur, std::move(out));
  }

  SymFunc top_component() const { return component(degree()); }

  SymFunc operator-() const {
    SymFunc r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }

  SymFunc& operator+=(const SymFunc& o) {
    if (basis_ != o.basis_) {
      *this = to_h();
      return *this += o.to_h();
    }
    for (const auto& [k, c] : o.terms_) accumulate(k, c);
    return *this;
  }
  SymFunc& operator-=(const SymFunc& o) { return *this += -o; }

  SymFunc& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const Rational& s) { return a *= s; }
  friend SymFunc operator*(const Rational& s, SymFunc a) { return a *= s; }

  /// Product; computed in the h-monomial basis, where it is key concatenation.
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    if (a.is_zero() || b.is_zero()) return SymFunc();
    check_degree(a.degree() + b.degree());
    const SymFunc ha = a.to_h();
    const SymFunc hb = b.to_h();
    Terms out;
    std::vector<int> merged;
    for (const auto& [ka, ca] : ha.terms_)
      for (const auto& [kb, cb] : hb.terms_) {
        merged.assign(ka.vec().begin(), ka.vec().end());
        merged.insert(merged.end(), kb.vec().begin(), kb.vec().end());
        std::sort(merged.rbegin(), merged.rend());
        out[Partition(merged)] += ca * cb;
      }
    return SymFunc(Basis::h_monomial, std::move(out));
  }
  SymFunc& operator*=(const SymFunc& o) { return *this = *this * o; }

  /// Equality of ring elements, independent of representation.
  friend bool operator==(const SymFunc& a, const SymFunc& b) {
    if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
    return a.to_schur().terms_ == b.to_schur().terms_;
  }

 private:
  void accumulate(const Partition& k, const Rational& c) {
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }

  Basis basis_ = Basis::h_monomial;
  Terms terms_;
};

namespace detail {

class SchurInHCache {
 public:
  const std::map<Partition, Rational>& get(const Partition& mu) {
    std::lock_guard lock(mutex_);
    auto it = table_.find(mu);
    if (it != table_.end()) return it->second;
    fill_degree(mu.size());
    return table_.at(mu);
  }

 private:
  // s_lambda = h_lambda - sum_{mu > lambda} K_{mu lambda} s_mu; partitions_of
  // lists dominance-larger shapes first because lex order refines dominance.
  void fill_degree(int n) {
    for (const auto& lambda : partitions_of(n)) {
      if (table_.count(lambda)) continue;
      std::map<Partition, Rational> expansion{{lambda, Rational(1)}};
      for (const auto& mu : partitions_of(n)) {
        if (!(lambda < mu)) continue;
        Integer k = kostka(mu, lambda);
        if (k == 0) continue;
        for (const auto& [key, c] : table_.at(mu)) expansion[key] -= Rational(k) * c;
      }
      for (auto e = expansion.begin(); e != expansion.end();)
        e = e->second == 0 ? expansion.erase(e) : std::next(e);
      table_.emplace(lambda, std::move(expansion));
    }
  }

  std::mutex mutex_;
  std::map<Partition, std::map<Partition, Rational>> table_;
};

inline const std::map<Partition, Rational>& schur_in_h(const Partition& lambda) {
  static SchurInHCache cache;
  return cache.get(lambda);
}

}  // namespace detail

inline SymFunc h(int k) {
  if (k < 0) return SymFunc();
  if (k == 0) return SymFunc::one();
  return SymFunc::h_monomial(Partition{k});
}

/// e_k in the h-monomial basis, from sum_{i=0}^k (-1)^i e_i h_{k-i} = 0.
inline SymFunc e(int k) {
  if (k < 0) return SymFunc();
  check_degree(k);
  std::vector<SymFunc> es{SymFunc::one()};
  for (int n = 1; n <= k; ++n) {
    SymFunc acc;
    for (int i = 0; i < n; ++i) {
      SymFunc term = es[i] * h(n - i);
      acc += (n - 1 - i) % 2 ? -term : term;
    }
    es.push_back(std::move(acc));
  }
  return es[k];
}

/// Power sum p_k (p_0 is taken as 1), from Newton's identity
/// k h_k = sum_{i=1}^k p_i h_{k-i}.
inline SymFunc p(int k) {
  if (k < 0) return SymFunc();
  if (k == 0) return SymFunc::one();
  check_degree(k);
  std::vector<SymFunc> ps{SymFunc::one()};
  for (int n = 1; n <= k; ++n) {
    SymFunc acc = h(n) * Rational(n);
    for (int i = 1; i < n; ++i) acc -= ps[i] * h(n - i);
    ps.push_back(std::move(acc));
  }
  return ps[k];
}

enum class Generator { h, e, p };

inline SymFunc generator(Generator kind, int k) {
  switch (kind) {
    case Generator::h: return h(k);
    case Generator::e: return e(k);
    case Generator::p: return p(k);
  }
  return SymFunc();
}

/// Product p_{rho_1} p_{rho_2} ...
inline SymFunc power_sum_product(const Partition& rho) {
  SymFunc r = SymFunc::one();
  for (int part : rho.parts()) r *= p(part);
  return r;
}

/// The involution swapping h_k and e_k; conjugates Schur keys.
inline SymFunc omega(const SymFunc& f) {
  SymFunc::Terms out;
  const SymFunc s = f.to_schur();
  for (const auto& [mu, c] : s.terms()) out.emplace(mu.conjugate(), c);
  return SymFunc(Basis::schur, std::move(out));
}

/// h_0..h_max of the supersymmetric specialization at (x; y):
/// h_k(x;y) = sum_{r+s=k} h_r(x) e_s(y).
inline std::vector<Rational> super_complete_values(const EvalPoint& pt, int max_degree) {
  auto hx = complete_values(pt.x, max_degree);
  auto ey = elementary_values(pt.y, max_degree);
  std::vector<Rational> out(static_cast<std::size_t>(std::max(max_degree, 0)) + 1, Rational(0));
  for (int k = 0; k <= max_degree; ++k)
    for (int r = 0; r <= k; ++r) out[k] += hx[r] * ey[k - r];
  return out;
}

/// Value of the supersymmetric function f(x; y).
inline Rational eval_super(const SymFunc& f, const EvalPoint& pt) {
  if (f.is_zero()) return 0;
  const SymFunc fh = f.to_h();
  auto hv = super_complete_values(pt, fh.degree());
  Rational total = 0;
  for (const auto& [lambda, c] : fh.terms()) {
    Rational term = c;
    for (int part : lambda.parts()) term *= hv[part];
    total += term;
  }
  return total;
}

namespace detail {
inline std::vector<std::pair<Partition, Rational>> graded_terms(const SymFunc::Terms& t) {
  std::vector<std::pair<Partition, Rational>> terms(t.begin(), t.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return graded_less(b.first, a.first); });
  return terms;
}
}  // namespace detail

/// Terms by decreasing degree, then decreasing lexicographic order.
inline std::vector<std::pair<Partition, Rational>> ordered_schur_terms(const SymFunc& f) {
  return detail::graded_terms(f.to_schur().terms());
}

inline std::vector<std::pair<Partition, Rational>> ordered_h_terms(const SymFunc& f) {
  return detail::graded_terms(f.to_h().terms());
}

/// `s[2] - 1/2 s[1]` style; `letter` names the basis.
inline std::string format_terms(const std::vector<std::pair<Partition, Rational>>& terms, const std::string& letter) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mu, c] : terms) {
    Rational mag = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1) out += to_string(mag) + " ";
    out += letter + "[" + to_string(mu) + "]";
    first = false;
  }
  return out;
}

inline std::string to_string(const SymFunc& f) { return format_terms(ordered_schur_terms(f), "s"); }

/// Inverse of `to_string`: a signed sum of `[coeff] s[parts]` terms. A bare
/// rational is a multiple of s[].
inline SymFunc parse_symfunc(std::string_view text) {
  SymFunc::Terms terms;
  std::string s(detail::trim(text));
  if (s == "0") return SymFunc(Basis::schur, {});
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  bool any = false;
  while (true) {
    skip_ws();
    if (pos >= s.size()) break;
    Rational sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    } else if (any) {
      throw ParseError("expected '+' or '-' in '" + s + "'");
    }
    Rational coeff = 1;
    bool had_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      had_coeff = true;
      std::size_t start = pos;
      while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
      coeff = parse_rational(s.substr(start, pos - start));
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    Partition key;
    if (pos < s.size() && s[pos] == 's') {
      if (pos + 1 >= s.size() || s[pos + 1] != '[') throw ParseError("expected 's[' in '" + s + "'");
      auto close = s.find(']', pos);
      if (close == std::string::npos) throw ParseError("unterminated 's[' in '" + s + "'");
      key = parse_partition(s.substr(pos + 2, close - pos - 2));
      pos = close + 1;
    } else if (!had_coeff) {
      throw ParseError("expected a term in '" + s + "'");
    }
    terms[key] += sign * coeff;
    any = true;
  }
  if (!any) throw ParseError("empty symmetric function text");
  return SymFunc(Basis::schur, std::move(terms));
}

}  // namespace frobschur
