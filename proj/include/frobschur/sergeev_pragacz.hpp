#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "frobschur/determinant.hpp"
#include "frobschur/errors.hpp"
#include "frobschur/params.hpp"
#include "frobschur/partition.hpp"
#include "frobschur/rational.hpp"
#include "frobschur/symfunc.hpp"

namespace frobschur {

/// (x | a)^m = (x - a_1)...(x - a_m); 1 when m = 0.
inline Rational generalized_power(const Rational& x, const ParamSequence& a, int m) {
  Rational r = 1;
  for (int k = 1; k <= m; ++k) r *= x - a.at(k);
  return r;
}

inline Rational vandermonde(const std::vector<Rational>& z) {
  Rational r = 1;
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t k = i + 1; k < z.size(); ++k) r *= z[i] - z[k];
  return r;
}

namespace detail {

inline void require_distinct(const std::vector<Rational>& z, const char* name) {
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t k = i + 1; k < z.size(); ++k)
      if (z[i] == z[k])
        throw DegenerateError(std::string("degenerate point, use another evaluator: repeated ") + name +
                              " coordinate " + to_string(z[i]));
}

inline int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t k = i + 1; k < perm.size(); ++k)
      if (perm[i] > perm[k]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

}  // namespace detail

/// s_{mu;a}(x_1..x_n; y_1..y_n) as an antisymmetrization over S_n x S_n
/// divided by V(x) V(y). Returns 0 when d(mu) > n. Coordinates within x
/// (and within y) must be pairwise distinct.
inline Rational sergeev_pragacz_eval(const Partition& mu, const ParamSequence& a, const EvalPoint& pt) {
  if (pt.x.size() != pt.y.size())
    throw DomainError("antisymmetrization evaluator needs equally many x and y coordinates");
  const int n = static_cast<int>(pt.x.size());
  detail::require_distinct(pt.x, "x");
  detail::require_distinct(pt.y, "y");
  const int d = mu.depth();
  if (d > n) return 0;
  const ParamSequence dual = a.dual();
  const Partition conj = mu.conjugate();

  auto g = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Rational r = 1;
    for (int i = 1; i <= d; ++i) {
      r *= generalized_power(x[i - 1], a, mu.row(i) - i) * pow(x[i - 1], std::max(n - mu.row(i), 0));
      r *= generalized_power(y[i - 1], dual, conj.row(i) - i) * pow(y[i - 1], std::max(n - conj.row(i), 0));
      if (r == 0) return r;
    }
    for (int i = d + 1; i <= n; ++i) r *= pow(x[i - 1], n - i) * pow(y[i - 1], n - i);
    for (int i = 1; i <= n && r != 0; ++i)
      for (int j = 1; j <= std::min(n, mu.row(i)); ++j) r *= x[i - 1] + y[j - 1];
    return r;
  };

  std::vector<int> px(n), py(n);
  std::iota(px.begin(), px.end(), 0);
  Rational numerator = 0;
  std::vector<Rational> xs(n), ys(n);
  do {
    for (int i = 0; i < n; ++i) xs[i] = pt.x[px[i]];
    int sx = detail::permutation_sign(px);
    std::iota(py.begin(), py.end(), 0);
    do {
      for (int i = 0; i < n; ++i) ys[i] = pt.y[py[i]];
      Rational term = g(xs, ys);
      if (term != 0) numerator += (sx * detail::permutation_sign(py) > 0) ? term : Rational(-term);
    } while (std::next_permutation(py.begin(), py.end()));
  } while (std::next_permutation(px.begin(), px.end()));
  return numerator / (vandermonde(pt.x) * vandermonde(pt.y));
}

/// Closed form at exactly d(mu) coordinate pairs:
/// det[(x_i|a)^{p_j}]/V(x) * det[(y_i|dual)^{q_j}]/V(y) * prod (x_i + y_j).
inline Rational factorized_eval(const Partition& mu, const ParamSequence& a, const EvalPoint& pt) {
  const auto f = to_frobenius(mu);
  const std::size_t d = f.p.size();
  if (pt.x.size() != d || pt.y.size() != d)
    throw DomainError("factorized evaluator needs exactly d(mu) = " + std::to_string(d) + " x and y coordinates");
  detail::require_distinct(pt.x, "x");
  detail::require_distinct(pt.y, "y");
  const ParamSequence dual = a.dual();
  std::vector<std::vector<Rational>> mx(d, std::vector<Rational>(d)), my(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      mx[i][j] = generalized_power(pt.x[i], a, f.p[j]);
      my[i][j] = generalized_power(pt.y[i], dual, f.q[j]);
    }
  Rational r = bareiss_determinant(mx) / vandermonde(pt.x) * bareiss_determinant(my) / vandermonde(pt.y);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) r *= pt.x[i] + pt.y[j];
  return r;
}

}  // namespace frobschur
