#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "frobschur/errors.hpp"
#include "frobschur/params.hpp"
#include "frobschur/partition.hpp"
#include "frobschur/rational.hpp"
#include "frobschur/series.hpp"
#include "frobschur/skew.hpp"
#include "frobschur/symfunc.hpp"
#include "frobschur/tableaux.hpp"

namespace frobschur {

/// Polynomial in u, v with rational coefficients; key (du, dv).
class BivariatePoly {
 public:
  using Key = std::pair<int, int>;

  BivariatePoly() = default;
  static BivariatePoly constant(const Rational& c) {
    BivariatePoly p;
    p.add(0, 0, c);
    return p;
  }
  /// c0 + cu u + cv v.
  static BivariatePoly linear(const Rational& c0, const Rational& cu, const Rational& cv) {
    BivariatePoly p;
    p.add(0, 0, c0);
    p.add(1, 0, cu);
    p.add(0, 1, cv);
    return p;
  }

  const std::map<Key, Rational>& coefficients() const noexcept { return coeffs_; }

  void add(int du, int dv, const Rational& c) {
    if (c == 0) return;
    auto& slot = coeffs_[{du, dv}];
    slot += c;
    if (slot == 0) coeffs_.erase({du, dv});
  }

  Rational coeff(int du, int dv) const {
    auto it = coeffs_.find({du, dv});
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [k, c] : coeffs_) d = std::max(d, k.first + k.second);
    return d;
  }

  Rational operator()(const Rational& u, const Rational& v) const {
    Rational total = 0;
    for (const auto& [k, c] : coeffs_) total += c * pow(u, k.first) * pow(v, k.second);
    return total;
  }

  /// f(v, u).
  BivariatePoly swapped() const {
    BivariatePoly p;
    for (const auto& [k, c] : coeffs_) p.add(k.second, k.first, c);
    return p;
  }

  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly p;
    for (const auto& [ka, ca] : a.coeffs_)
      for (const auto& [kb, cb] : b.coeffs_) p.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return p;
  }

  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) {
    for (const auto& [k, c] : b.coeffs_) a.add(k.first, k.second, c);
    return a;
  }

  bool operator==(const BivariatePoly&) const = default;

 private:
  std::map<Key, Rational> coeffs_;
};

/// One linear factor of a ribbon polynomial: (u + v), (u - a_k) or (v + a_k).
struct RibbonFactor {
  enum class Kind { u_plus_v, u_minus_param, v_plus_param };
  Kind kind = Kind::u_plus_v;
  long param_index = 0;
  Rational value;

  BivariatePoly poly() const {
    switch (kind) {
      case Kind::u_plus_v: return BivariatePoly::linear(0, 1, 1);
      case Kind::u_minus_param: return BivariatePoly::linear(-value, 1, 0);
      case Kind::v_plus_param: return BivariatePoly::linear(value, 0, 1);
    }
    return {};
  }

  Rational operator()(const Rational& u, const Rational& v) const {
    switch (kind) {
      case Kind::u_plus_v: return u + v;
      case Kind::u_minus_param: return u - value;
      case Kind::v_plus_param: return v + value;
    }
    return 0;
  }
};

/// f_{nu;a}(u, v) kept as its list of linear factors: per connected component,
/// (u+v), then (u - a'_{delta-eps}) per vertical interior side and
/// (v + a'_{delta-eps}) per horizontal one, with a'_eps = a_{eps+1/2}.
class RibbonFactors {
 public:
  RibbonFactors() = default;
  explicit RibbonFactors(std::vector<RibbonFactor> factors) : factors_(std::move(factors)) {}

  const std::vector<RibbonFactor>& factors() const noexcept { return factors_; }

  BivariatePoly expand() const {
    BivariatePoly p = BivariatePoly::constant(1);
    for (const auto& f : factors_) p = p * f.poly();
    return p;
  }

  Rational operator()(const Rational& u, const Rational& v) const {
    Rational r = 1;
    for (const auto& f : factors_) {
      r *= f(u, v);
      if (r == 0) break;
    }
    return r;
  }

 private:
  std::vector<RibbonFactor> factors_;
};

inline RibbonFactors ribbon_factors(const SkewShape& nu, const ParamSequence& a) {
  auto dec = decompose_skew(nu);
  if (dec.has_2x2) throw DomainError("ribbon polynomial undefined: 2x2 block in " + to_string(nu));
  std::vector<RibbonFactor> out;
  for (const auto& component : dec.components) {
    out.push_back({RibbonFactor::Kind::u_plus_v, 0, 0});
    std::vector<long> us, vs;
    for (const auto& side : interior_sides(component))
      (side.orientation == Orientation::vertical ? us : vs).push_back(side.parameter_index());
    // u-factors then v-factors, each by increasing index
    std::sort(us.begin(), us.end());
    std::sort(vs.begin(), vs.end());
    for (long k : us) out.push_back({RibbonFactor::Kind::u_minus_param, k, a.at(k)});
    for (long k : vs) out.push_back({RibbonFactor::Kind::v_plus_param, k, a.at(k)});
  }
  return RibbonFactors(std::move(out));
}

inline BivariatePoly ribbon_poly(const SkewShape& nu, const ParamSequence& a) { return ribbon_factors(nu, a).expand(); }

/// Factored text such as `(u+v)(u+1)(u-2)(v+0)`.
inline std::string to_string(const RibbonFactors& f) {
  if (f.factors().empty()) return "1";
  std::string out;
  for (const auto& x : f.factors()) {
    switch (x.kind) {
      case RibbonFactor::Kind::u_plus_v: out += "(u+v)"; break;
      case RibbonFactor::Kind::u_minus_param:
        out += x.value < 0 ? "(u+" + to_string(Rational(-x.value)) + ")" : "(u-" + to_string(x.value) + ")";
        break;
      case RibbonFactor::Kind::v_plus_param:
        out += x.value < 0 ? "(v-" + to_string(Rational(-x.value)) + ")" : "(v+" + to_string(x.value) + ")";
        break;
    }
  }
  return out;
}

/// Factored text with symbolic parameters, e.g. `(u+v)(u-a_{-1})(v+a_0)`.
inline std::string to_symbolic_string(const RibbonFactors& f) {
  if (f.factors().empty()) return "1";
  std::string out;
  for (const auto& x : f.factors()) {
    switch (x.kind) {
      case RibbonFactor::Kind::u_plus_v: out += "(u+v)"; break;
      case RibbonFactor::Kind::u_minus_param: out += "(u-a_{" + std::to_string(x.param_index) + "})"; break;
      case RibbonFactor::Kind::v_plus_param: out += "(v+a_{" + std::to_string(x.param_index) + "})"; break;
    }
  }
  return out;
}

inline std::string to_string(const BivariatePoly& p) {
  if (p.coefficients().empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) {
    const auto& [k, c] = *it;
    Rational mag = abs(c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    std::string mono;
    if (k.first) mono += k.first == 1 ? "u" : "u^" + std::to_string(k.first);
    if (k.second) mono += (mono.empty() ? "" : "*") + std::string(k.second == 1 ? "v" : "v^" + std::to_string(k.second));
    if (mono.empty())
      out += to_string(mag);
    else
      out += (mag == 1 ? "" : to_string(mag) + "*") + mono;
    first = false;
  }
  return out;
}

/// Precomputed tableau sum for s_{mu;a}(x; y) with at most n coordinate pairs:
/// sum over diagonal-strict tableaux T with entries <= n of
/// prod_k f_{T^{-1}(k); a}(x_k, y_k).
class CombinatorialExpansion {
 public:
  CombinatorialExpansion(const Partition& mu, const ParamSequence& a, int n) : n_(n) {
    std::map<std::vector<Cell>, std::size_t> index;
    for_each_diagonal_strict(mu, n, [&](const DiagonalStrictTableau& t) {
      std::vector<std::size_t> row;
      for (int k = 1; k <= n; ++k) {
        SkewShape level = t.level_set(k);
        auto cells = level.cells();
        auto it = index.find(cells);
        if (it == index.end()) {
          it = index.emplace(cells, factors_.size()).first;
          factors_.push_back(ribbon_factors(level, a));
        }
        row.push_back(it->second);
      }
      tableaux_.push_back(std::move(row));
    });
  }

  int max_entry() const noexcept { return n_; }
  std::size_t tableau_count() const noexcept { return tableaux_.size(); }

  Rational evaluate(const EvalPoint& pt) const {
    if (static_cast<int>(std::max(pt.x.size(), pt.y.size())) > n_)
      throw DomainError("point has more coordinates than the expansion supports");
    auto coord = [](const std::vector<Rational>& v, int k) { return k < static_cast<int>(v.size()) ? v[k] : Rational(0); };
    std::vector<std::map<std::size_t, Rational>> memo(n_);
    Rational total = 0;
    for (const auto& row : tableaux_) {
      Rational term = 1;
      for (int k = 0; k < n_ && term != 0; ++k) {
        auto& slot = memo[k];
        auto it = slot.find(row[k]);
        if (it == slot.end()) it = slot.emplace(row[k], factors_[row[k]](coord(pt.x, k), coord(pt.y, k))).first;
        term *= it->second;
      }
      total += term;
    }
    return total;
  }

 private:
  int n_;
  std::vector<RibbonFactors> factors_;
  std::vector<std::vector<std::size_t>> tableaux_;
};

/// s_{mu;a}(x; y) as a sum over diagonal-strict tableaux.
inline Rational combinatorial_eval(const Partition& mu, const ParamSequence& a, const EvalPoint& pt) {
  int n = static_cast<int>(std::max(pt.x.size(), pt.y.size()));
  return CombinatorialExpansion(mu, a, n).evaluate(pt);
}

}  // namespace frobschur
