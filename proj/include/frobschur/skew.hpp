#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frobschur/errors.hpp"
#include "frobschur/partition.hpp"
#include "frobschur/rational.hpp"

namespace frobschur {

/// Cell (i, j): row i counted downward, column j rightward, both from 1.
struct Cell {
  int i = 0;
  int j = 0;
  auto operator<=>(const Cell&) const = default;
};

/// outer / inner with inner contained in outer.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!contains(inner_, outer_)) throw DomainError("skew shape needs inner contained in outer");
  }
  explicit SkewShape(Partition straight) : outer_(std::move(straight)) {}

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  int size() const noexcept { return outer_.size() - inner_.size(); }
  bool empty() const noexcept { return size() == 0; }

  bool has_cell(int i, int j) const noexcept { return outer_.has_cell(i, j) && !inner_.has_cell(i, j); }

  /// Cells in row-major order.
  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= static_cast<int>(outer_.length()); ++i)
      for (int j = inner_.row(i) + 1; j <= outer_.row(i); ++j) out.push_back({i, j});
    return out;
  }

  /// The transposed skew shape outer'/inner'.
  SkewShape conjugate() const { return SkewShape(outer_.conjugate(), inner_.conjugate()); }

  bool operator==(const SkewShape& o) const { return cells() == o.cells(); }

 private:
  Partition outer_;
  Partition inner_;
};

inline SkewShape parse_skew(std::string_view text) {
  auto s = detail::trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return SkewShape(parse_partition(s));
  auto outer = parse_partition(s.substr(0, slash));
  auto inner = parse_partition(s.substr(slash + 1));
  if (!contains(inner, outer)) throw ParseError("inner shape not contained in outer: '" + std::string(text) + "'");
  return SkewShape(outer, inner);
}

inline std::string to_string(const SkewShape& s) { return to_string(s.outer()) + "/" + to_string(s.inner()); }

struct SkewDecomposition {
  std::vector<SkewShape> components;
  bool has_2x2 = false;
};

/// Edge-connected components of a skew shape. Each component C is returned as
/// (inner + C) / inner, which is again a skew shape.
inline SkewDecomposition decompose_skew(const SkewShape& shape) {
  SkewDecomposition out;
  auto cells = shape.cells();
  std::set<Cell> remaining(cells.begin(), cells.end());
  for (const auto& c : cells) {
    if (shape.has_cell(c.i + 1, c.j) && shape.has_cell(c.i, c.j + 1) && shape.has_cell(c.i + 1, c.j + 1))
      out.has_2x2 = true;
  }
  while (!remaining.empty()) {
    std::vector<Cell> stack{*remaining.begin()};
    std::set<Cell> component;
    remaining.erase(remaining.begin());
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      component.insert(c);
      const Cell neighbours[] = {{c.i - 1, c.j}, {c.i + 1, c.j}, {c.i, c.j - 1}, {c.i, c.j + 1}};
      for (const auto& n : neighbours) {
        auto it = remaining.find(n);
        if (it != remaining.end()) {
          stack.push_back(n);
          remaining.erase(it);
        }
      }
    }
    std::vector<int> rows(shape.inner().vec());
    rows.resize(shape.outer().length(), 0);
    for (const auto& c : component) rows[c.i - 1] = std::max(rows[c.i - 1], c.j);
    out.components.emplace_back(Partition(std::move(rows)), shape.inner());
  }
  return out;
}

enum class Orientation { vertical, horizontal };

/// A unit edge shared by two cells, identified by its midpoint.
struct InteriorSide {
  Rational eps;
  Rational delta;
  Orientation orientation = Orientation::vertical;

  /// The integer index delta - eps + 1/2 used to pick the parameter a'.
  long parameter_index() const {
    Rational k = delta - eps + Rational(1, 2);
    if (k.get_den() != 1) throw DomainError("interior side midpoint is not half-integral");
    return k.get_num().get_si();
  }

  bool operator==(const InteriorSide&) const = default;
};

/// Interior sides of a ribbon (connected, 2x2-free skew shape). A cell (i,j)
/// is the unit square with corners (i-1,j-1) and (i,j).
inline std::vector<InteriorSide> interior_sides(const SkewShape& ribbon) {
  auto dec = decompose_skew(ribbon);
  if (dec.has_2x2) throw DomainError("shape contains a 2x2 block: " + to_string(ribbon));
  if (dec.components.size() > 1) throw DomainError("shape is not connected: " + to_string(ribbon));
  std::vector<InteriorSide> sides;
  for (const auto& c : ribbon.cells()) {
    if (ribbon.has_cell(c.i, c.j + 1))
      sides.push_back({Rational(2 * c.i - 1, 2), Rational(c.j), Orientation::vertical});
    if (ribbon.has_cell(c.i + 1, c.j))
      sides.push_back({Rational(c.i), Rational(2 * c.j - 1, 2), Orientation::horizontal});
  }
  return sides;
}

}  // namespace frobschur
