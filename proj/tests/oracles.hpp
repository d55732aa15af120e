#pragma once
// Slow, direct reference computations for the tests. Nothing here calls into
// the library beyond the value types (Partition, Rational, ParamSequence).

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "frobschur/params.hpp"
#include "frobschur/partition.hpp"
#include "frobschur/rational.hpp"

namespace oracle {

using frobschur::Integer;
using frobschur::ParamSequence;
using frobschur::Partition;
using frobschur::Rational;

// Standard tableaux of nu/mu counted by growing mu one cell at a time.
inline Integer count_syt(const Partition& mu, const Partition& nu) {
  std::vector<int> cur(mu.vec());
  std::vector<int> target(nu.vec());
  if (cur.size() > target.size()) return 0;
  for (std::size_t i = 0; i < cur.size(); ++i)
    if (cur[i] > target[i]) return 0;
  cur.resize(target.size(), 0);
  std::map<std::vector<int>, Integer> memo;
  std::function<Integer()> go = [&]() -> Integer {
    if (cur == target) return 1;
    auto it = memo.find(cur);
    if (it != memo.end()) return it->second;
    Integer total = 0;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur[i] >= target[i]) continue;
      if (i > 0 && cur[i - 1] <= cur[i]) continue;
      ++cur[i];
      total += go();
      --cur[i];
    }
    memo[cur] = total;
    return total;
  };
  return go();
}

// Supersymmetric Schur s_mu(x; y) by enumerating supertableaux: letters
// 1..n (x) then 1'..m' (y); x-letters weakly increase along rows and strictly
// down columns, y-letters strictly along rows and weakly down columns.
inline Rational super_schur(const Partition& mu, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  const int n = static_cast<int>(x.size()), m = static_cast<int>(y.size());
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= static_cast<int>(mu.length()); ++i)
    for (int j = 1; j <= mu.row(i); ++j) cells.push_back({i, j});
  std::map<std::pair<int, int>, int> fill;
  Rational total = 0;
  std::function<void(std::size_t, Rational)> go = [&](std::size_t k, Rational w) {
    if (w == 0) return;
    if (k == cells.size()) {
      total += w;
      return;
    }
    auto [i, j] = cells[k];
    for (int letter = 0; letter < n + m; ++letter) {
      bool primed = letter >= n;
      if (j > 1) {
        int left = fill[{i, j - 1}];
        if (letter < left || (primed && letter == left)) continue;
      }
      if (i > 1) {
        int up = fill[{i - 1, j}];
        if (letter < up || (!primed && letter == up)) continue;
      }
      fill[{i, j}] = letter;
      go(k + 1, w * (primed ? y[letter - n] : x[letter]));
    }
    fill.erase({i, j});
  };
  go(0, 1);
  return total;
}

// Semistandard tableaux of shape lambda and content alpha.
inline Integer count_ssyt(const Partition& lambda, const std::vector<int>& content) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= static_cast<int>(lambda.length()); ++i)
    for (int j = 1; j <= lambda.row(i); ++j) cells.push_back({i, j});
  const int n = static_cast<int>(content.size());
  std::vector<int> used(n, 0);
  std::map<std::pair<int, int>, int> fill;
  Integer count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == cells.size()) {
      if (used == content) ++count;
      return;
    }
    auto [i, j] = cells[k];
    for (int v = 0; v < n; ++v) {
      if (used[v] >= content[v]) continue;
      if (j > 1 && v < fill[{i, j - 1}]) continue;
      if (i > 1 && v <= fill[{i - 1, j}]) continue;
      fill[{i, j}] = v;
      ++used[v];
      go(k + 1);
      --used[v];
    }
    fill.erase({i, j});
  };
  go(0);
  return count;
}

// Values of elementary symmetric polynomials e_0..e_n of `v`.
inline std::vector<Rational> elementary(const std::vector<Rational>& v) {
  std::vector<Rational> e(v.size() + 1, Rational(0));
  e[0] = 1;
  for (const auto& z : v)
    for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += e[k - 1] * z;
  return e;
}

// h_k(x; y) = sum_{r+s=k} h_r(x) e_s(y), h_r(x) by brute expansion.
inline Rational super_h(int k, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  if (k < 0) return 0;
  // h_r(x): sum over multisets of size r
  std::function<Rational(int, std::size_t)> h = [&](int r, std::size_t from) -> Rational {
    if (r == 0) return 1;
    Rational s = 0;
    for (std::size_t i = from; i < x.size(); ++i) s += x[i] * h(r - 1, i);
    return s;
  };
  auto e = elementary(y);
  Rational total = 0;
  for (int s = 0; s <= k && s < static_cast<int>(e.size()); ++s) total += h(k - s, 0) * e[s];
  return total;
}

inline Rational det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

// s_{mu;a}(x; y) as a numeric Jacobi-Trudi determinant, with
// h_{k;b} = sum_i (-1)^{k-i} e_{k-i}(b_1..b_{k-1}) h_i.
inline Rational multiparameter_value(const Partition& mu, const ParamSequence& a, const std::vector<Rational>& x,
                                     const std::vector<Rational>& y) {
  const int l = static_cast<int>(mu.length());
  if (l == 0) return 1;
  auto h_mp = [&](int k, long shift) -> Rational {
    if (k < 0) return 0;
    if (k == 0) return 1;
    std::vector<Rational> b;
    for (int i = 1; i <= k - 1; ++i) b.push_back(a.at(i + shift));
    auto e = elementary(b);
    Rational total = 0;
    for (int i = 1; i <= k; ++i) {
      Rational term = e[k - i] * super_h(i, x, y);
      total += (k - i) % 2 ? Rational(-term) : term;
    }
    return total;
  };
  std::vector<std::vector<Rational>> m(l, std::vector<Rational>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) m[i][j] = h_mp(mu.row(i + 1) - i + j, -j);
  return det(m);
}

// Centralizer order z_rho.
inline Integer z(const Partition& rho) {
  Integer r = 1;
  std::map<int, int> mult;
  for (int p : rho.parts()) {
    r *= p;
    ++mult[p];
  }
  for (const auto& [p, k] : mult)
    for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace oracle
