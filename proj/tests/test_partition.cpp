#include <gtest/gtest.h>

#include "frobschur/partition.hpp"
#include "frobschur/tableaux.hpp"
#include "oracles.hpp"

using namespace frobschur;

TEST(Partition, Construction) {
  EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
  EXPECT_THROW(Partition({1, 2}), DomainError);
  EXPECT_THROW(Partition({2, -1}), DomainError);
  Partition p{4, 2, 2};
  EXPECT_EQ(p.size(), 8);
  EXPECT_EQ(p.row(1), 4);
  EXPECT_EQ(p.row(9), 0);
  EXPECT_EQ(p.col(2), 3);
  EXPECT_EQ(p.depth(), 2);
  EXPECT_EQ(Partition{}.depth(), 0);
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(Partition{}.conjugate(), Partition{});
  EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
  EXPECT_EQ(Partition({4, 2, 2}).conjugate(), Partition({3, 3, 1, 1}));
  for (const auto& nu : partitions_up_to(10)) EXPECT_EQ(nu.conjugate().conjugate(), nu);
}

TEST(Partition, Frobenius) {
  EXPECT_EQ(to_string(to_frobenius(Partition{})), "|");
  EXPECT_EQ(to_string(to_frobenius(Partition{2, 1})), "1|1");
  EXPECT_EQ(to_string(to_frobenius(Partition{4, 2, 2})), "3,0|2,1");
  EXPECT_EQ(from_frobenius(parse_frobenius("|")), Partition{});
  EXPECT_EQ(from_frobenius(parse_frobenius("1|1")), Partition({2, 1}));
  EXPECT_EQ(from_frobenius(parse_frobenius("3,0|2,1")), Partition({4, 2, 2}));
  EXPECT_THROW(from_frobenius(parse_frobenius("0,1|1,0")), DomainError);
  EXPECT_THROW(parse_frobenius("1,2"), ParseError);
}

TEST(Partition, FrobeniusRoundTripAndConjugation) {
  for (const auto& nu : partitions_up_to(12)) {
    auto f = to_frobenius(nu);
    ASSERT_EQ(from_frobenius(f), nu);
    auto g = to_frobenius(nu.conjugate());
    EXPECT_EQ(g.p, f.q);
    EXPECT_EQ(g.q, f.p);
    EXPECT_EQ(static_cast<int>(f.p.size()), nu.depth());
  }
}

TEST(Partition, Contains) {
  EXPECT_TRUE(contains(Partition{}, Partition({3, 1})));
  EXPECT_TRUE(contains(Partition({2, 1}), Partition({2, 1})));
  EXPECT_FALSE(contains(Partition({2}), Partition({1, 1})));
}

TEST(Partition, Parse) {
  EXPECT_EQ(parse_partition(""), Partition{});
  EXPECT_EQ(parse_partition("4,2,2"), Partition({4, 2, 2}));
  EXPECT_EQ(to_string(Partition({4, 2, 2})), "4,2,2");
  for (auto bad : {"1,2", "a", "2,,1", "-1", "2;1"}) EXPECT_THROW(parse_partition(bad), ParseError) << bad;
}

TEST(Partition, Enumeration) {
  std::vector<int> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(partitions_of(n).size(), static_cast<std::size_t>(counts[n]));
  EXPECT_EQ(partitions_of(3), (std::vector<Partition>{Partition{3}, Partition{2, 1}, Partition{1, 1, 1}}));
  EXPECT_EQ(subpartitions(Partition{2, 1}).size(), 5u);
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dim_straight(Partition{}), 1);
  EXPECT_EQ(dim_straight(Partition{2, 1}), 2);
  EXPECT_EQ(dim_straight(Partition{3, 2}), 5);
  EXPECT_EQ(dim_skew(Partition{1}, Partition{2, 1}), 2);
  EXPECT_EQ(dim_skew(Partition{1}, Partition{2, 2}), 2);
  EXPECT_EQ(dim_skew(Partition{2}, Partition{1, 1}), 0);
  EXPECT_EQ(dim_skew_bruteforce(Partition{}, Partition{2, 1}), 2);
  EXPECT_EQ(dim_skew_bruteforce(Partition{1}, Partition{2, 1}), 2);
  EXPECT_EQ(dim_skew_bruteforce(Partition{2, 1}, Partition{2, 1}), 1);
}

TEST(Dimension, AgreesWithOracle) {
  for (const auto& nu : partitions_up_to(8))
    for (const auto& mu : subpartitions(nu)) {
      auto expected = oracle::count_syt(mu, nu);
      ASSERT_EQ(dim_skew(mu, nu), expected) << to_string(mu) << " / " << to_string(nu);
      ASSERT_EQ(dim_skew_bruteforce(mu, nu), expected);
    }
  for (const auto& nu : partitions_up_to(10)) EXPECT_EQ(dim_skew(Partition{}, nu), dim_straight(nu));
  EXPECT_EQ(dim_straight(Partition{5, 5, 5, 5, 5}), Integer("701149020"));
}

TEST(Characters, Examples) {
  EXPECT_EQ(mn_character(Partition{2, 1}, Partition{1, 1, 1}), 2);
  EXPECT_EQ(mn_character(Partition{2, 1}, Partition{3}), -1);
  EXPECT_EQ(mn_character(Partition{3}, Partition{3}), 1);
  EXPECT_THROW(mn_character(Partition{3}, Partition{2}), DomainError);
}

TEST(Characters, IdentityClassIsDimension) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& nu : partitions_of(n))
      EXPECT_EQ(mn_character(nu, Partition(std::vector<int>(n, 1))), dim_straight(nu));
}

TEST(Characters, Orthogonality) {
  for (int n = 1; n <= 6; ++n) {
    auto ps = partitions_of(n);
    for (const auto& s : ps)
      for (const auto& t : ps) {
        Integer col = 0;
        for (const auto& nu : ps) col += mn_character(nu, s) * mn_character(nu, t);
        EXPECT_EQ(col, s == t ? oracle::z(s) : Integer(0)) << to_string(s) << " " << to_string(t);
        // rows: sum over classes weighted by 1/z
        Rational r = 0;
        for (const auto& c : ps) r += frac(mn_character(s, c) * mn_character(t, c), oracle::z(c));
        EXPECT_EQ(r, s == t ? 1 : 0);
      }
  }
}

TEST(Kostka, AgreesWithTableauCount) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& shape : partitions_of(n))
      for (const auto& content : partitions_of(n)) EXPECT_EQ(kostka(shape, content), oracle::count_ssyt(shape, content.vec()));
}
