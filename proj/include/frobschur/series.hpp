#pragma once

#include <map>
#include <utility>
#include <vector>

#include "frobschur/errors.hpp"
#include "frobschur/rational.hpp"
#include "frobschur/symfunc.hpp"

namespace frobschur {

enum class Variable { u, v };

/// Element of Lambda[[1/u, 1/v]] modulo terms of total order above `order`.
/// Key (j, k) is the coefficient of u^{-j} v^{-k}.
class TruncatedSeries2 {
 public:
  using Key = std::pair<int, int>;

  explicit TruncatedSeries2(int order) : order_(order) {
    if (order < 0) throw DomainError("series order must be nonnegative");
  }

  int order() const noexcept { return order_; }
  const std::map<Key, SymFunc>& coefficients() const noexcept { return coeffs_; }

  SymFunc coeff(int j, int k) const {
    auto it = coeffs_.find({j, k});
    return it == coeffs_.end() ? SymFunc() : it->second;
  }

  void add_term(int j, int k, const SymFunc& c) {
    if (j < 0 || k < 0) throw DomainError("series exponents must be nonnegative");
    if (j + k > order_ || c.is_zero()) return;
    auto& slot = coeffs_[{j, k}];
    slot += c;
    if (slot.is_zero()) coeffs_.erase({j, k});
  }

  static TruncatedSeries2 constant(int order, const SymFunc& c) {
    TruncatedSeries2 s(order);
    s.add_term(0, 0, c);
    return s;
  }

  /// H(u) = 1 + sum h_k u^{-k}.
  static TruncatedSeries2 complete_series(int order) {
    TruncatedSeries2 s(order);
    for (int k = 0; k <= order; ++k) s.add_term(k, 0, h(k));
    return s;
  }

  /// E(v) = 1 + sum e_k v^{-k}.
  static TruncatedSeries2 elementary_series(int order) {
    TruncatedSeries2 s(order);
    for (int k = 0; k <= order; ++k) s.add_term(0, k, e(k));
    return s;
  }

  /// 1 / ((w - c_1)...(w - c_m)) = sum_{r >= 0} h_r(c) w^{-m-r}.
  static TruncatedSeries2 expand_rational(int order, Variable w, const std::vector<Rational>& roots) {
    TruncatedSeries2 s(order);
    const int m = static_cast<int>(roots.size());
    if (m > order) return s;
    auto hv = complete_values(roots, order - m);
    for (int r = 0; m + r <= order; ++r) {
      SymFunc c = SymFunc::constant(hv[r]);
      if (w == Variable::u)
        s.add_term(m + r, 0, c);
      else
        s.add_term(0, m + r, c);
    }
    return s;
  }

  /// Multiplies by the variable w. Every term must carry a negative power of
  /// w; the result is exact to one order less.
  TruncatedSeries2 times(Variable w) const {
    TruncatedSeries2 s(order_ == 0 ? 0 : order_ - 1);
    for (const auto& [key, c] : coeffs_) {
      auto [j, k] = key;
      if (w == Variable::u) {
        if (j == 0) throw DomainError("multiplying by u would create a positive power");
        s.add_term(j - 1, k, c);
      } else {
        if (k == 0) throw DomainError("multiplying by v would create a positive power");
        s.add_term(j, k - 1, c);
      }
    }
    return s;
  }

  TruncatedSeries2 truncated(int order) const {
    if (order > order_) throw DomainError("cannot raise the truncation order");
    TruncatedSeries2 s(order);
    for (const auto& [key, c] : coeffs_) s.add_term(key.first, key.second, c);
    return s;
  }

  TruncatedSeries2& operator+=(const TruncatedSeries2& o) {
    require_same_order(o);
    for (const auto& [key, c] : o.coeffs_) add_term(key.first, key.second, c);
    return *this;
  }

  friend TruncatedSeries2 operator+(TruncatedSeries2 a, const TruncatedSeries2& b) { return a += b; }

  friend TruncatedSeries2 operator*(const TruncatedSeries2& a, const TruncatedSeries2& b) {
    a.require_same_order(b);
    TruncatedSeries2 s(a.order_);
    for (const auto& [ka, ca] : a.coeffs_)
      for (const auto& [kb, cb] : b.coeffs_) {
        int j = ka.first + kb.first, k = ka.second + kb.second;
        if (j + k <= a.order_) s.add_term(j, k, ca * cb);
      }
    return s;
  }

  friend TruncatedSeries2 operator*(const TruncatedSeries2& a, const SymFunc& f) {
    TruncatedSeries2 s(a.order_);
    for (const auto& [key, c] : a.coeffs_) s.add_term(key.first, key.second, c * f);
    return s;
  }

  /// Keys whose coefficients differ.
  std::vector<Key> mismatches(const TruncatedSeries2& o) const {
    require_same_order(o);
    std::vector<Key> out;
    for (int j = 0; j <= order_; ++j)
      for (int k = 0; j + k <= order_; ++k)
        if (!(coeff(j, k) == o.coeff(j, k))) out.emplace_back(j, k);
    return out;
  }

  friend bool operator==(const TruncatedSeries2& a, const TruncatedSeries2& b) { return a.mismatches(b).empty(); }

 private:
  void require_same_order(const TruncatedSeries2& o) const {
    if (o.order_ != order_)
      throw DomainError("series truncation orders differ: " + std::to_string(order_) + " vs " +
                        std::to_string(o.order_));
  }

  int order_;
  std::map<Key, SymFunc> coeffs_;
};

}  // namespace frobschur
