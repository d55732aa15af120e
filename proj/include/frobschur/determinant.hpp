#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "frobschur/errors.hpp"
#include "frobschur/rational.hpp"

namespace frobschur {

/// Division-free determinant by Laplace expansion along rows, memoized on the
/// set of columns already used. `entry(i, j)` is queried lazily (0-based) and
/// `is_zero` lets callers skip vanishing entries. Intended for small orders
/// over rings without division (e.g. symmetric functions).
template <class T, class Entry, class IsZero>
T cofactor_determinant(std::size_t n, Entry&& entry, IsZero&& is_zero, T one, T zero) {
  if (n == 0) return one;
  if (n > 20) throw DomainError("cofactor determinant order too large");
  std::vector<std::vector<T>> cache(n, std::vector<T>(n, zero));
  std::vector<std::vector<bool>> known(n, std::vector<bool>(n, false));
  auto at = [&](std::size_t i, std::size_t j) -> const T& {
    if (!known[i][j]) {
      cache[i][j] = entry(i, j);
      known[i][j] = true;
    }
    return cache[i][j];
  };
  // minor[mask] = determinant of rows (n - popcount(mask))..n-1 restricted to
  // the columns in mask. Built bottom-up so each mask is computed once.
  std::unordered_map<std::uint32_t, T> minor;
  minor.emplace(0u, one);
  std::vector<std::uint32_t> layer{0u};
  for (std::size_t depth = 1; depth <= n; ++depth) {
    std::size_t row = n - depth;
    std::vector<std::uint32_t> next;
    std::unordered_map<std::uint32_t, T> fresh;
    for (std::uint32_t prev : layer) {
      for (std::size_t col = 0; col < n; ++col) {
        std::uint32_t bit = 1u << col;
        if (prev & bit) continue;
        std::uint32_t mask = prev | bit;
        if (fresh.count(mask)) continue;
        T acc = zero;
        int sign_index = 0;
        for (std::size_t c = 0; c < n; ++c) {
          std::uint32_t cb = 1u << c;
          if (!(mask & cb)) continue;
          const T& e = at(row, c);
          auto it = minor.find(mask & ~cb);
          if (!is_zero(e) && it != minor.end() && !is_zero(it->second)) {
            if (sign_index % 2 == 0)
              acc = acc + e * it->second;
            else
              acc = acc - e * it->second;
          }
          ++sign_index;
        }
        fresh.emplace(mask, std::move(acc));
        next.push_back(mask);
      }
    }
    minor = std::move(fresh);
    layer = std::move(next);
  }
  return minor.at((1u << n) - 1u);
}

/// Fraction-free (Bareiss) elimination over the rationals.
inline Rational bareiss_determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  Rational sign = 1;
  Rational prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return Rational(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev_pivot;
      }
      m[i][k] = 0;
    }
    prev_pivot = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace frobschur

namespace frobschur {

/// Solves A x = b exactly by Gauss-Jordan elimination; empty when A is singular.
inline std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DomainError("linear system dimensions differ");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return {};
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

}  // namespace frobschur
