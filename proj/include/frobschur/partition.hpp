#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frobschur/errors.hpp"
#include "frobschur/rational.hpp"

namespace frobschur {

/// A partition, equivalently a Young diagram. Rows are 1-based in the
/// accessors `row(i)` / `col(j)`; `parts()` exposes the raw sequence.
class Partition {
 public:
  Partition() = default;

  /// Accepts a weakly decreasing sequence of nonnegative integers; trailing
  /// zeros are dropped.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] <= 0) throw DomainError("partition parts must be positive");
      if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
        throw DomainError("partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const noexcept { return parts_; }
  const std::vector<int>& vec() const noexcept { return parts_; }

  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// Length of row i (1-based); 0 past the last row.
  int row(long i) const noexcept {
    return i >= 1 && static_cast<std::size_t>(i) <= parts_.size() ? parts_[i - 1] : 0;
  }

  /// Length of column j (1-based).
  int col(long j) const noexcept {
    int c = 0;
    for (int p : parts_)
      if (p >= j) ++c;
    return c;
  }

  /// Number of diagonal cells.
  int depth() const noexcept {
    int d = 0;
    while (static_cast<std::size_t>(d) < parts_.size() && parts_[d] >= d + 1) ++d;
    return d;
  }

  bool has_cell(long i, long j) const noexcept { return j >= 1 && j <= row(i); }

  Partition conjugate() const {
    std::vector<int> c;
    int first = parts_.empty() ? 0 : parts_.front();
    c.reserve(static_cast<std::size_t>(first));
    for (int j = 1; j <= first; ++j) c.push_back(col(j));
    return Partition(std::move(c));
  }

  /// Arm + leg + 1 at cell (i,j).
  int hook_length(int i, int j) const noexcept { return row(i) - j + col(j) - i + 1; }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

inline Partition conjugate(const Partition& nu) { return nu.conjugate(); }

/// True iff mu is contained in nu as diagrams.
inline bool contains(const Partition& mu, const Partition& nu) {
  if (mu.length() > nu.length()) return false;
  for (std::size_t k = 0; k < mu.length(); ++k)
    if (mu.parts()[k] > nu.parts()[k]) return false;
  return true;
}

/// Graded order: by size, then lexicographically on parts.
inline bool graded_less(const Partition& a, const Partition& b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a < b;
}

struct FrobeniusCoords {
  std::vector<int> p;
  std::vector<int> q;

  int depth() const noexcept { return static_cast<int>(p.size()); }
  bool operator==(const FrobeniusCoords&) const = default;
};

inline FrobeniusCoords to_frobenius(const Partition& nu) {
  FrobeniusCoords c;
  int d = nu.depth();
  for (int i = 1; i <= d; ++i) {
    c.p.push_back(nu.row(i) - i);
    c.q.push_back(nu.col(i) - i);
  }
  return c;
}

inline Partition from_frobenius(const FrobeniusCoords& c) {
  if (c.p.size() != c.q.size()) throw DomainError("Frobenius coordinates must have equal length");
  auto strictly_decreasing = [](const std::vector<int>& v) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] < 0) return false;
      if (k + 1 < v.size() && v[k] <= v[k + 1]) return false;
    }
    return true;
  };
  if (!strictly_decreasing(c.p) || !strictly_decreasing(c.q))
    throw DomainError("Frobenius coordinates must be strictly decreasing and nonnegative");
  int d = c.depth();
  std::vector<int> rows;
  for (int i = 1; i <= d; ++i) rows.push_back(c.p[i - 1] + i);
  // Rows below the diagonal block come from the column lengths q_j + j.
  int longest_col = d == 0 ? 0 : c.q[0] + 1;
  for (int i = d + 1; i <= longest_col; ++i) {
    int len = 0;
    for (int j = 1; j <= d; ++j)
      if (c.q[j - 1] + j >= i) ++len;
    rows.push_back(len);
  }
  return Partition(std::move(rows));
}

/// Comma-separated parts; the empty string is the empty partition.
inline Partition parse_partition(std::string_view text) {
  auto s = detail::trim(text);
  if (s.empty() || s == "0" || s == "-" || s == "()" ) return Partition{};
  std::vector<int> parts;
  for (auto tok : detail::split(s, ',')) {
    auto t = detail::trim(tok);
    if (!detail::is_integer_text(t) || t.front() == '-' || t.front() == '+' || t.size() > 6)
      throw ParseError("malformed partition '" + std::string(text) + "'");
    int v = std::stoi(std::string(t));
    if (v <= 0) throw ParseError("partition parts must be positive in '" + std::string(text) + "'");
    parts.push_back(v);
  }
  for (std::size_t k = 0; k + 1 < parts.size(); ++k)
    if (parts[k] < parts[k + 1])
      throw ParseError("partition parts must be weakly decreasing in '" + std::string(text) + "'");
  return Partition(std::move(parts));
}

inline std::string to_string(const Partition& nu) {
  std::string out;
  for (std::size_t k = 0; k < nu.length(); ++k) {
    if (k) out += ',';
    out += std::to_string(nu.parts()[k]);
  }
  return out;
}

inline FrobeniusCoords parse_frobenius(std::string_view text) {
  auto s = detail::trim(text);
  auto bar = s.find('|');
  if (bar == std::string_view::npos) throw ParseError("Frobenius form needs '|': '" + std::string(text) + "'");
  auto read = [&](std::string_view side) {
    std::vector<int> v;
    side = detail::trim(side);
    if (side.empty()) return v;
    for (auto tok : detail::split(side, ',')) {
      auto t = detail::trim(tok);
      if (!detail::is_integer_text(t) || t.front() == '-' || t.size() > 6)
        throw ParseError("malformed Frobenius coordinate in '" + std::string(text) + "'");
      v.push_back(std::stoi(std::string(t)));
    }
    return v;
  };
  FrobeniusCoords c{read(s.substr(0, bar)), read(s.substr(bar + 1))};
  if (c.p.size() != c.q.size()) throw ParseError("unequal Frobenius arm/leg counts in '" + std::string(text) + "'");
  return c;
}

inline std::string to_string(const FrobeniusCoords& c) {
  auto join = [](const std::vector<int>& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(v[k]);
    }
    return out;
  };
  return join(c.p) + "|" + join(c.q);
}

/// All partitions of n in decreasing lexicographic order ((n) first).
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// All partitions of size at most n, grouped by size.
inline std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto level = partitions_of(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// Partitions contained in nu (including the empty one and nu itself).
inline std::vector<Partition> subpartitions(const Partition& nu) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t row, int bound) {
    out.emplace_back(cur);
    if (row >= nu.length()) return;
    for (int v = 1; v <= std::min(bound, nu.parts()[row]); ++v) {
      cur.push_back(v);
      rec(row + 1, v);
      cur.pop_back();
    }
  };
  rec(0, nu.empty() ? 0 : nu.parts()[0]);
  return out;
}

}  // namespace frobschur

template <>
struct std::hash<frobschur::Partition> {
  std::size_t operator()(const frobschur::Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.parts()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};
