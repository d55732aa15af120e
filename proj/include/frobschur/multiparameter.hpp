#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "frobschur/determinant.hpp"
#include "frobschur/errors.hpp"
#include "frobschur/params.hpp"
#include "frobschur/partition.hpp"
#include "frobschur/rational.hpp"
#include "frobschur/series.hpp"
#include "frobschur/symfunc.hpp"
#include "frobschur/tableaux.hpp"

namespace frobschur {

/// h_{k;a} = sum_{i=1}^k (-1)^{k-i} e_{k-i}(a_1..a_{k-1}) h_i, with h_{0;a} = 1
/// and h_{k;a} = 0 for k < 0.
inline SymFunc h_mp(int k, const ParamSequence& a) {
  if (k < 0) return SymFunc();
  if (k == 0) return SymFunc::one();
  auto ev = elementary_values(a.values(1, k - 1), k);
  SymFunc out;
  for (int i = 1; i <= k; ++i) {
    Rational c = ev[k - i];
    if ((k - i) % 2) c = -c;
    if (c != 0) out += h(i) * c;
  }
  return out;
}

/// e_{k;a} = sum_{i=1}^k (-1)^{k-i} e_{k-i}(dual_1..dual_{k-1}) e_i.
inline SymFunc e_mp(int k, const ParamSequence& a) {
  if (k < 0) return SymFunc();
  if (k == 0) return SymFunc::one();
  auto ev = elementary_values(a.dual().values(1, k - 1), k);
  SymFunc out;
  for (int i = 1; i <= k; ++i) {
    Rational c = ev[k - i];
    if ((k - i) % 2) c = -c;
    if (c != 0) out += e(i) * c;
  }
  return out;
}

namespace detail {
inline SymFunc symfunc_determinant(std::size_t n, const std::function<SymFunc(std::size_t, std::size_t)>& entry) {
  return cofactor_determinant<SymFunc>(
      n, entry, [](const SymFunc& f) { return f.is_zero(); }, SymFunc::one(), SymFunc());
}
}  // namespace detail

namespace detail {
// s_{mu;a} only depends on a_{2 - mu'_1} .. a_{mu_1 - 1}. Intermediate
// determinant entries read further out, so a strict custom window is checked
// against that range and the entries are then read permissively.
inline ParamSequence relevant_window(const Partition& mu, const ParamSequence& a) {
  if (a.kind() != SequenceKind::custom || a.policy() != WindowPolicy::strict || mu.empty()) return a;
  a.require_window(2 - mu.col(1), mu.row(1) - 1);
  return a.detached(WindowPolicy::permissive);
}
}  // namespace detail

/// s_{mu;a} = det[h_{mu_i - i + j; tau^{1-j} a}]. `order` below l(mu) is
/// raised to l(mu).
inline SymFunc s_mp(const Partition& mu, const ParamSequence& params, int order = 0) {
  const ParamSequence a = detail::relevant_window(mu, params);
  const std::size_t n = std::max<std::size_t>(mu.length(), static_cast<std::size_t>(std::max(order, 0)));
  return detail::symfunc_determinant(n, [&](std::size_t i, std::size_t j) {
    int k = mu.row(static_cast<long>(i) + 1) - static_cast<int>(i) + static_cast<int>(j);
    return h_mp(k, a.shift(-static_cast<long>(j)));
  });
}

/// The dual determinant det[e_{mu'_i - i + j; tau^{j-1} a}].
inline SymFunc s_mp_dual(const Partition& mu, const ParamSequence& params, int order = 0) {
  const ParamSequence a = detail::relevant_window(mu, params);
  const Partition conj = mu.conjugate();
  const std::size_t n = std::max<std::size_t>(conj.length(), static_cast<std::size_t>(std::max(order, 0)));
  return detail::symfunc_determinant(n, [&](std::size_t i, std::size_t j) {
    int k = conj.row(static_cast<long>(i) + 1) - static_cast<int>(i) + static_cast<int>(j);
    return e_mp(k, a.shift(static_cast<long>(j)));
  });
}

/// FS_mu: the multiparameter Schur function at a_i = i - 1/2.
inline SymFunc frobenius_schur(const Partition& mu) { return s_mp(mu, ParamSequence::special()); }

/// The hook (p+1, 1^q) = (p | q).
inline Partition hook_partition(int p, int q) {
  std::vector<int> parts{p + 1};
  parts.insert(parts.end(), static_cast<std::size_t>(q), 1);
  return Partition(parts);
}

inline SymFunc hook_mp(int p, int q, const ParamSequence& a) { return s_mp(hook_partition(p, q), a); }

/// Giambelli: det[s_{(p_i | q_j); a}] over the Frobenius coordinates of mu.
inline SymFunc giambelli(const Partition& mu, const ParamSequence& a) {
  auto f = to_frobenius(mu);
  return detail::symfunc_determinant(f.p.size(), [&](std::size_t i, std::size_t j) {
    return hook_mp(f.p[i], f.q[j], a);
  });
}

/// Thread-safe memo of s_{mu;a} for one fixed sequence.
class SchurMpTable {
 public:
  explicit SchurMpTable(ParamSequence a) : a_(std::move(a)) {}

  const ParamSequence& params() const noexcept { return a_; }

  SymFunc get(const Partition& mu) const {
    {
      std::lock_guard lock(mutex_);
      auto it = cache_.find(mu);
      if (it != cache_.end()) return it->second;
    }
    SymFunc f = s_mp(mu, a_);
    std::lock_guard lock(mutex_);
    return cache_.emplace(mu, std::move(f)).first->second;
  }

 private:
  ParamSequence a_;
  mutable std::mutex mutex_;
  mutable std::map<Partition, SymFunc> cache_;
};

struct SeriesReport {
  int order = 0;
  bool equal = false;
  std::vector<TruncatedSeries2::Key> mismatches;
};

/// Compares 1 + (u+v) sum_{p,q} s_{(p|q);a} / ((u-a_1)..(u-a_{p+1}) (v-dual_1)..(v-dual_{q+1}))
/// against H(u) E(v), coefficient-wise through total order N in (1/u, 1/v).
inline SeriesReport hook_series_check(int order, const ParamSequence& a) {
  if (order < 1) throw DomainError("hook series order must be positive");
  const ParamSequence dual = a.dual();
  // The inner sum is built one order deeper because multiplying by u or v
  // lowers the order by one.
  const int deep = order + 1;
  TruncatedSeries2 inner(deep);
  for (int p = 0; p + 2 <= deep; ++p)
    for (int q = 0; p + q + 2 <= deep; ++q) {
      auto up = TruncatedSeries2::expand_rational(deep, Variable::u, a.values(1, p + 1));
      auto vq = TruncatedSeries2::expand_rational(deep, Variable::v, dual.values(1, q + 1));
      inner += (up * vq) * hook_mp(p, q, a);
    }
  TruncatedSeries2 lhs = TruncatedSeries2::constant(order, SymFunc::one()) + inner.times(Variable::u) +
                         inner.times(Variable::v);
  TruncatedSeries2 rhs =
      TruncatedSeries2::complete_series(order) * TruncatedSeries2::elementary_series(order);
  SeriesReport r;
  r.order = order;
  r.mismatches = lhs.mismatches(rhs);
  r.equal = r.mismatches.empty();
  return r;
}

/// c_{p p'}(a, b) = h_{p-p'}(b_1..b_{p'+1}; -a_1..-a_p); zero when p < p'.
inline Rational transition_c(int p, int p_prime, const ParamSequence& a, const ParamSequence& b) {
  if (p < p_prime || p_prime < 0) return 0;
  if (p == p_prime) return 1;
  EvalPoint pt{b.values(1, p_prime + 1), {}};
  for (const auto& v : a.values(1, p)) pt.y.push_back(-v);
  return super_complete_values(pt, p - p_prime)[p - p_prime];
}

/// Coefficients of s_{mu;a} in the basis {s_{nu;b}}, via products of two
/// d x d determinants of one-row transition coefficients. Every strictly
/// decreasing coordinate tuple bounded by (p_1 | q_1) is tried; only
/// nonzero coefficients are returned.
inline std::map<Partition, Rational> transition_expand(const Partition& mu, const ParamSequence& a,
                                                       const ParamSequence& b) {
  std::map<Partition, Rational> out;
  const auto f = to_frobenius(mu);
  const int d = f.depth();
  if (d == 0) {
    out.emplace(Partition{}, Rational(1));
    return out;
  }
  const ParamSequence a_dual = a.dual(), b_dual = b.dual();
  const int pmax = f.p[0], qmax = f.q[0];
  std::vector<std::vector<Rational>> cp(pmax + 1, std::vector<Rational>(pmax + 1));
  std::vector<std::vector<Rational>> cq(qmax + 1, std::vector<Rational>(qmax + 1));
  for (int x = 0; x <= pmax; ++x)
    for (int y = 0; y <= pmax; ++y) cp[x][y] = transition_c(x, y, a, b);
  for (int x = 0; x <= qmax; ++x)
    for (int y = 0; y <= qmax; ++y) cq[x][y] = transition_c(x, y, a_dual, b_dual);

  auto tuples = [d](int bound) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int below) {
      if (static_cast<int>(cur.size()) == d) {
        all.push_back(cur);
        return;
      }
      for (int v = below - 1; v >= d - static_cast<int>(cur.size()) - 1; --v) {
        cur.push_back(v);
        rec(v);
        cur.pop_back();
      }
    };
    rec(bound + 1);
    return all;
  };
  auto det_of = [d](const std::vector<std::vector<Rational>>& c, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m[i][j] = c[rows[i]][cols[j]];
    return bareiss_determinant(std::move(m));
  };
  const auto ptuples = tuples(pmax), qtuples = tuples(qmax);
  for (const auto& pp : ptuples) {
    Rational left = det_of(cp, f.p, pp);
    if (left == 0) continue;
    for (const auto& qq : qtuples) {
      Rational right = det_of(cq, f.q, qq);
      if (right == 0) continue;
      out.emplace(from_frobenius({pp, qq}), left * right);
    }
  }
  return out;
}

/// sum_nu c_nu s_{nu;b}.
inline SymFunc combine(const std::map<Partition, Rational>& coeffs, const ParamSequence& b) {
  SymFunc out;
  for (const auto& [nu, c] : coeffs) out += s_mp(nu, b) * c;
  return out;
}

/// (x(lambda); y(lambda)) = (a_{p_1+1}, ..; dual_{q_1+1}, ..); the empty
/// diagram maps to the origin.
inline EvalPoint eval_point_of_diagram(const Partition& lambda, const ParamSequence& a) {
  EvalPoint pt;
  const auto f = to_frobenius(lambda);
  const ParamSequence dual = a.dual();
  for (int p : f.p) pt.x.push_back(a.at(p + 1));
  for (int q : f.q) pt.y.push_back(dual.at(q + 1));
  return pt;
}

/// prod_{(i,j) in mu} (a_{mu_i - i + 1} - a_{j - mu'_j}).
inline Rational value_at_self(const Partition& mu, const ParamSequence& a) {
  Rational r = 1;
  for (int i = 1; i <= static_cast<int>(mu.length()); ++i)
    for (int j = 1; j <= mu.row(i); ++j) r *= a.at(mu.row(i) - i + 1) - a.at(j - mu.col(j));
  return r;
}

inline Rational eval_at_diagram(const SymFunc& s_mu, const ParamSequence& a, const Partition& lambda) {
  return eval_super(s_mu, eval_point_of_diagram(lambda, a));
}

/// s_{mu;a}(x(lambda); y(lambda)), computed from the determinant.
inline Rational eval_at_diagram(const Partition& mu, const ParamSequence& a, const Partition& lambda) {
  return eval_at_diagram(s_mp(mu, a), a, lambda);
}

struct InterpolationOptions {
  /// Strict: a_1..a_n distinct, dual_1..dual_n distinct and a_i != -dual_j.
  /// Permissive: only the divisors s_{lambda;a}(x(lambda); y(lambda)) must be nonzero.
  WindowPolicy node_policy = WindowPolicy::strict;
  /// Visit diagrams of equal size in reverse order (the result must not change).
  bool reverse_within_degree = false;
};

/// Coefficients c(lambda) with f = sum_{|lambda| <= n} c(lambda) s_{lambda;a},
/// by Newton-type recurrence on |lambda|.
inline std::map<Partition, Rational> interpolate(const SymFunc& f, const ParamSequence& a, int n,
                                                 const InterpolationOptions& opts = {}) {
  if (n < 0) throw DomainError("interpolation degree bound must be nonnegative");
  if (f.degree() > n)
    throw DomainError("interpolation input has degree " + std::to_string(f.degree()) + " > " + std::to_string(n));
  if (opts.node_policy == WindowPolicy::strict && n > 0) {
    auto xs = a.values(1, n);
    auto ys = a.dual().values(1, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i < j && xs[i] == xs[j])
          throw DegenerateError("interpolation degenerate: a_" + std::to_string(i + 1) + " = a_" +
                                std::to_string(j + 1));
        if (i < j && ys[i] == ys[j])
          throw DegenerateError("interpolation degenerate: dual parameters " + std::to_string(i + 1) + " and " +
                                std::to_string(j + 1) + " coincide");
        if (xs[i] == -ys[j])
          throw DegenerateError("interpolation degenerate: a_" + std::to_string(i + 1) + " = -dual_" +
                                std::to_string(j + 1));
      }
  }
  SchurMpTable table(a);
  std::vector<Partition> order;
  for (int k = 0; k <= n; ++k) {
    auto level = partitions_of(k);
    std::sort(level.begin(), level.end());
    if (opts.reverse_within_degree) std::reverse(level.begin(), level.end());
    order.insert(order.end(), level.begin(), level.end());
  }
  std::map<Partition, Rational> c;
  for (const auto& lambda : order) {
    EvalPoint pt = eval_point_of_diagram(lambda, a);
    Rational value = eval_super(f, pt);
    for (const auto& [mu, cm] : c) {
      if (mu == lambda || !contains(mu, lambda)) continue;
      value -= cm * eval_super(table.get(mu), pt);
    }
    Rational divisor = eval_super(table.get(lambda), pt);
    if (divisor == 0)
      throw DegenerateError("interpolation degenerate: s_{" + to_string(lambda) + ";a} vanishes at its own node");
    if (value != 0) c.emplace(lambda, value / divisor);
  }
  return c;
}

/// p#_rho = sum_{lambda |- |rho|} chi^lambda_rho FS_lambda.
inline SymFunc p_sharp(const Partition& rho) {
  SymFunc out;
  for (const auto& lambda : partitions_of(rho.size())) {
    Integer chi = mn_character(lambda, rho);
    if (chi != 0) out += frobenius_schur(lambda) * Rational(chi);
  }
  return out;
}

struct RatioReport {
  Rational lhs;
  Rational rhs;
  bool equal() const { return lhs == rhs; }
};

/// dim(mu, nu) / dim nu against FS_mu(x(nu); y(nu)) / n(n-1)...(n-m+1).
inline RatioReport dim_ratio_check(const Partition& mu, const Partition& nu, const SymFunc* fs_mu = nullptr) {
  if (nu.size() < mu.size()) throw DomainError("dim ratio needs |nu| >= |mu|");
  const ParamSequence special = ParamSequence::special();
  RatioReport r;
  r.lhs = frac(dim_skew(mu, nu), dim_straight(nu));
  Rational value = fs_mu ? eval_at_diagram(*fs_mu, special, nu) : eval_at_diagram(mu, special, nu);
  r.rhs = value / Rational(falling_factorial(nu.size(), mu.size()));
  return r;
}

/// chi^nu_{rho + 1^{n-m}} / dim nu against p#_rho(x(nu); y(nu)) / n(n-1)...(n-m+1).
inline RatioReport character_ratio_check(const Partition& rho, const Partition& nu, const SymFunc* p_sharp_rho = nullptr) {
  if (nu.size() < rho.size()) throw DomainError("character ratio needs |nu| >= |rho|");
  std::vector<int> cls(rho.vec());
  cls.insert(cls.end(), static_cast<std::size_t>(nu.size() - rho.size()), 1);
  RatioReport r;
  r.lhs = frac(mn_character(nu, Partition(cls)), dim_straight(nu));
  SymFunc ps = p_sharp_rho ? *p_sharp_rho : p_sharp(rho);
  r.rhs = eval_super(ps, eval_point_of_diagram(nu, ParamSequence::special())) /
          Rational(falling_factorial(nu.size(), rho.size()));
  return r;
}

}  // namespace frobschur
