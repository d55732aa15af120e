#include <gtest/gtest.h>

#include <set>

#include "frobschur/skew.hpp"
#include "frobschur/tableaux.hpp"

using namespace frobschur;

namespace {
std::set<std::pair<Rational, Rational>> midpoints(const SkewShape& s) {
  std::set<std::pair<Rational, Rational>> out;
  for (const auto& side : interior_sides(s)) out.insert({side.eps, side.delta});
  return out;
}

// All fillings with entries 1..n, weak along rows and columns, strict along
// diagonals, counted without any pruning order.
long brute_diagonal_strict(const Partition& mu, int n) {
  std::vector<Cell> cells = SkewShape(mu).cells();
  long count = 0;
  std::vector<int> v(cells.size(), 1);
  if (cells.empty()) return 1;
  while (true) {
    std::map<Cell, int> t;
    for (std::size_t k = 0; k < cells.size(); ++k) t[cells[k]] = v[k];
    bool ok = true;
    for (const auto& [c, x] : t) {
      auto right = t.find({c.i, c.j + 1});
      auto down = t.find({c.i + 1, c.j});
      auto diag = t.find({c.i + 1, c.j + 1});
      if (right != t.end() && right->second < x) ok = false;
      if (down != t.end() && down->second < x) ok = false;
      if (diag != t.end() && diag->second <= x) ok = false;
    }
    count += ok;
    std::size_t k = 0;
    while (k < v.size() && v[k] == n) v[k++] = 1;
    if (k == v.size()) break;
    ++v[k];
  }
  return count;
}
}  // namespace

TEST(Skew, ParseAndCells) {
  auto s = parse_skew("4,2,2/1,1");
  EXPECT_EQ(s.size(), 6);
  EXPECT_EQ(to_string(s), "4,2,2/1,1");
  EXPECT_EQ(parse_skew("2,1").inner(), Partition{});
  EXPECT_THROW(parse_skew("2/3"), ParseError);
  EXPECT_THROW(SkewShape(Partition{2}, Partition{3}), DomainError);
  EXPECT_THROW(parse_skew("2/1/1"), ParseError);
}

TEST(Skew, Decompose) {
  auto square = decompose_skew(parse_skew("2,2"));
  EXPECT_EQ(square.components.size(), 1u);
  EXPECT_TRUE(square.has_2x2);

  auto worked = decompose_skew(parse_skew("4,2,2/1,1"));
  EXPECT_EQ(worked.components.size(), 1u);
  EXPECT_FALSE(worked.has_2x2);

  auto split = decompose_skew(parse_skew("3,1/2"));
  ASSERT_EQ(split.components.size(), 2u);
  EXPECT_FALSE(split.has_2x2);
  std::set<std::vector<Cell>> cells;
  for (const auto& c : split.components) cells.insert(c.cells());
  EXPECT_TRUE(cells.count({Cell{1, 3}}));
  EXPECT_TRUE(cells.count({Cell{2, 1}}));
}

TEST(Skew, InteriorSides) {
  EXPECT_TRUE(interior_sides(parse_skew("1")).empty());
  auto two = interior_sides(parse_skew("2"));
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].orientation, Orientation::vertical);
  EXPECT_EQ(two[0].eps, frac(1, 2));
  EXPECT_EQ(two[0].delta, 1);

  std::set<std::pair<Rational, Rational>> expected{
      {frac(5, 2), 1}, {2, frac(3, 2)}, {1, frac(3, 2)}, {frac(1, 2), 2}, {frac(1, 2), 3}};
  EXPECT_EQ(midpoints(parse_skew("4,2,2/1,1")), expected);
  EXPECT_THROW(interior_sides(parse_skew("2,2")), DomainError);
  EXPECT_THROW(interior_sides(parse_skew("3,1/2")), DomainError);
}

TEST(Skew, SideCountAndHalfIntegrality) {
  std::vector<Partition> box;
  for (const auto& p : partitions_up_to(16))
    if (p.length() <= 4 && p.row(1) <= 4) box.push_back(p);
  int ribbons = 0;
  for (const auto& outer : box)
    for (const auto& inner : box) {
      if (outer == inner || !contains(inner, outer)) continue;
      SkewShape s(outer, inner);
      auto d = decompose_skew(s);
      if (d.has_2x2 || d.components.size() != 1) continue;
      ++ribbons;
      auto sides = interior_sides(s);
      EXPECT_EQ(static_cast<int>(sides.size()), s.size() - 1);
      for (const auto& side : sides) {
        Rational k = side.delta - side.eps + frac(1, 2);
        EXPECT_EQ(k.get_den(), 1);
      }
    }
  EXPECT_GT(ribbons, 50);
}

TEST(DiagonalStrict, Examples) {
  EXPECT_EQ(enumerate_diagonal_strict(Partition{1}, 1).size(), 1u);
  auto col = enumerate_diagonal_strict(Partition{1, 1}, 1);
  ASSERT_EQ(col.size(), 1u);
  EXPECT_EQ(col[0].rows, (std::vector<std::vector<int>>{{1}, {1}}));
  EXPECT_TRUE(enumerate_diagonal_strict(Partition{2, 2}, 1).empty());
  EXPECT_EQ(enumerate_diagonal_strict(Partition{}, 3).size(), 1u);
}

TEST(DiagonalStrict, CountsMatchBruteForce) {
  for (const auto& mu : partitions_up_to(5))
    for (int n = 1; n <= 3; ++n)
      EXPECT_EQ(static_cast<long>(enumerate_diagonal_strict(mu, n).size()), brute_diagonal_strict(mu, n))
          << to_string(mu) << " n=" << n;
}

TEST(DiagonalStrict, LexOrderAndLevelSets) {
  for (const auto& mu : partitions_up_to(6))
    for (int n = 1; n <= 3; ++n) {
      std::vector<std::vector<int>> words;
      for_each_diagonal_strict(mu, n, [&](const DiagonalStrictTableau& t) {
        std::vector<int> w;
        for (const auto& r : t.rows) w.insert(w.end(), r.begin(), r.end());
        words.push_back(w);
        int total = 0;
        for (int k = 1; k <= n; ++k) {
          auto level = t.level_set(k);
          total += level.size();
          EXPECT_FALSE(decompose_skew(level).has_2x2) << to_string(level);
        }
        EXPECT_EQ(total, mu.size());
      });
      EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
      EXPECT_EQ(std::adjacent_find(words.begin(), words.end()), words.end());
    }
}
