#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "frobschur/determinant.hpp"
#include "frobschur/errors.hpp"
#include "frobschur/partition.hpp"
#include "frobschur/rational.hpp"
#include "frobschur/skew.hpp"

namespace frobschur {

/// Number of standard tableaux of shape nu, by the hook length formula.
inline Integer dim_straight(const Partition& nu) {
  Integer hooks = 1;
  for (int i = 1; i <= static_cast<int>(nu.length()); ++i)
    for (int j = 1; j <= nu.row(i); ++j) hooks *= nu.hook_length(i, j);
  return factorial(nu.size()) / hooks;
}

/// Number of standard tableaux of skew shape nu/mu (0 unless mu is contained
/// in nu), via the Aitken determinant (N)! det[1/((nu_i - i) - (mu_j - j))!].
inline Integer dim_skew(const Partition& mu, const Partition& nu) {
  if (!contains(mu, nu)) return 0;
  const int order = static_cast<int>(nu.length());
  if (order == 0) return 1;
  std::vector<std::vector<Rational>> m(order, std::vector<Rational>(order));
  for (int i = 1; i <= order; ++i)
    for (int j = 1; j <= order; ++j) {
      int k = (nu.row(i) - i) - (mu.row(j) - j);
      m[i - 1][j - 1] = k < 0 ? Rational(0) : Rational(Integer(1), factorial(k));
    }
  Rational det = bareiss_determinant(std::move(m)) * Rational(factorial(nu.size() - mu.size()));
  if (det.get_den() != 1) throw DomainError("Aitken determinant is not integral");
  return det.get_num();
}

/// Independent count of skew standard tableaux: peel outer corners of nu until
/// reaching mu. Memoized per call.
inline Integer dim_skew_bruteforce(const Partition& mu, const Partition& nu) {
  if (!contains(mu, nu)) return 0;
  std::map<std::vector<int>, Integer> memo;
  std::function<Integer(std::vector<int>&)> count = [&](std::vector<int>& rows) -> Integer {
    if (Partition(rows) == mu) return 1;
    auto it = memo.find(rows);
    if (it != memo.end()) return it->second;
    Integer total = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      bool corner = rows[r] > 0 && (r + 1 == rows.size() || rows[r + 1] < rows[r]);
      if (!corner || rows[r] <= mu.row(static_cast<long>(r) + 1)) continue;
      --rows[r];
      total += count(rows);
      ++rows[r];
    }
    memo.emplace(rows, total);
    return total;
  };
  std::vector<int> rows(nu.vec());
  return count(rows);
}

/// Character value chi^nu at the class of cycle type sigma, by the
/// Murnaghan-Nakayama rule on beta-sets.
inline Integer mn_character(const Partition& nu, const Partition& sigma) {
  if (nu.size() != sigma.size())
    throw DomainError("character arguments must have equal size: " + to_string(nu) + " vs " + to_string(sigma));
  std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo;
  // beta numbers: nu_i + (L - i), strictly decreasing.
  const std::size_t L = nu.length();
  std::vector<int> beta;
  for (std::size_t i = 1; i <= L; ++i) beta.push_back(nu.row(static_cast<long>(i)) + static_cast<int>(L - i));
  std::function<Integer(const std::vector<int>&, std::size_t)> rec = [&](const std::vector<int>& b,
                                                                       std::size_t k) -> Integer {
    if (k == sigma.length()) return 1;
    auto key = std::make_pair(b, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const int r = sigma.parts()[k];
    std::set<int> occupied(b.begin(), b.end());
    Integer total = 0;
    for (std::size_t idx = 0; idx < b.size(); ++idx) {
      int target = b[idx] - r;
      if (target < 0 || occupied.count(target)) continue;
      int between = 0;
      for (int v : b)
        if (v > target && v < b[idx]) ++between;
      std::vector<int> nb(b);
      nb[idx] = target;
      std::sort(nb.rbegin(), nb.rend());
      Integer sub = rec(nb, k + 1);
      total += between % 2 ? -sub : sub;
    }
    memo.emplace(std::move(key), total);
    return total;
  };
  return rec(beta, 0);
}

/// Filling of a straight shape; `rows[i-1][j-1]` is the entry at cell (i, j).
struct DiagonalStrictTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  int at(int i, int j) const { return rows[i - 1][j - 1]; }

  int max_entry() const {
    int m = 0;
    for (const auto& r : rows)
      for (int v : r) m = std::max(m, v);
    return m;
  }

  /// Cells carrying value k, as a skew shape (entries increase down-right, so
  /// each level set is the difference of two consecutive order ideals).
  SkewShape level_set(int k) const {
    std::vector<int> upto, below;
    for (const auto& r : rows) {
      int le = 0, lt = 0;
      for (int v : r) {
        if (v <= k) ++le;
        if (v < k) ++lt;
      }
      upto.push_back(le);
      below.push_back(lt);
    }
    return SkewShape(Partition(upto), Partition(below));
  }

  bool operator==(const DiagonalStrictTableau&) const = default;
};

/// Visits every diagonal-strict tableau of shape mu with entries in
/// {1..max_entry}, in lexicographic order of the row-major reading word.
template <class Visitor>
void for_each_diagonal_strict(const Partition& mu, int max_entry, Visitor&& visit) {
  DiagonalStrictTableau t{mu, {}};
  for (int i = 1; i <= static_cast<int>(mu.length()); ++i) t.rows.emplace_back(mu.row(i), 0);
  std::vector<Cell> order;
  for (int i = 1; i <= static_cast<int>(mu.length()); ++i)
    for (int j = 1; j <= mu.row(i); ++j) order.push_back({i, j});
  std::function<void(std::size_t)> fill = [&](std::size_t pos) {
    if (pos == order.size()) {
      visit(static_cast<const DiagonalStrictTableau&>(t));
      return;
    }
    auto [i, j] = order[pos];
    int lo = 1;
    if (j > 1) lo = std::max(lo, t.at(i, j - 1));
    if (i > 1) lo = std::max(lo, t.at(i - 1, j));
    if (i > 1 && j > 1) lo = std::max(lo, t.at(i - 1, j - 1) + 1);
    for (int v = lo; v <= max_entry; ++v) {
      t.rows[i - 1][j - 1] = v;
      fill(pos + 1);
    }
    t.rows[i - 1][j - 1] = 0;
  };
  if (mu.empty()) {
    visit(static_cast<const DiagonalStrictTableau&>(t));
    return;
  }
  fill(0);
}

inline std::vector<DiagonalStrictTableau> enumerate_diagonal_strict(const Partition& mu, int max_entry) {
  std::vector<DiagonalStrictTableau> out;
  for_each_diagonal_strict(mu, max_entry, [&](const DiagonalStrictTableau& t) { out.push_back(t); });
  return out;
}

namespace detail {

inline void horizontal_strips(const Partition& mu, int size,
                              const std::function<void(const Partition&)>& visit) {
  // kappa_i ranges over [mu_{i+1}, mu_i] with total removal equal to size.
  std::vector<int> kappa(mu.length());
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == mu.length()) {
      if (left == 0) visit(Partition(kappa));
      return;
    }
    int hi = mu.parts()[i];
    int lo = i + 1 < mu.length() ? mu.parts()[i + 1] : 0;
    for (int v = hi; v >= lo; --v) {
      int removed = hi - v;
      if (removed > left) break;
      kappa[i] = v;
      rec(i + 1, left - removed);
    }
  };
  rec(0, size);
}

class KostkaCache {
 public:
  Integer get(const Partition& shape, const Partition& content) {
    {
      std::lock_guard lock(mutex_);
      auto it = table_.find({shape, content});
      if (it != table_.end()) return it->second;
    }
    Integer value = compute(shape, content);
    std::lock_guard lock(mutex_);
    table_.emplace(std::make_pair(shape, content), value);
    return value;
  }

 private:
  Integer compute(const Partition& shape, const Partition& content) {
    if (shape.size() != content.size()) return 0;
    if (content.empty()) return 1;
    // The largest entry occupies a horizontal strip of size content_last.
    std::vector<int> rest(content.vec());
    int last = rest.back();
    rest.pop_back();
    Partition smaller(rest);
    Integer total = 0;
    horizontal_strips(shape, last, [&](const Partition& kappa) { total += get(kappa, smaller); });
    return total;
  }

  std::mutex mutex_;
  std::map<std::pair<Partition, Partition>, Integer> table_;
};

inline KostkaCache& kostka_cache() {
  static KostkaCache cache;
  return cache;
}

}  // namespace detail

/// Number of semistandard tableaux of the given shape and content.
inline Integer kostka(const Partition& shape, const Partition& content) {
  return detail::kostka_cache().get(shape, content);
}

}  // namespace frobschur
