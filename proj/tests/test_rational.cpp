#include <gtest/gtest.h>

#include "frobschur/rational.hpp"

using namespace frobschur;

TEST(Rational, ParseCanonical) {
  EXPECT_EQ(parse_rational("2/4"), frac(1, 2));
  EXPECT_EQ(to_string(parse_rational("2/4")), "1/2");
  EXPECT_EQ(parse_rational(" -3 "), Rational(-3));
  EXPECT_EQ(parse_rational("+7/1"), Rational(7));
  EXPECT_EQ(to_string(parse_rational("-6/3")), "-2");
}

TEST(Rational, ParseRejects) {
  for (auto bad : {"", "1/0", "a", "1/2/3", "1.5", "3/-2", "--1", "/2", "2/"})
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Rational, List) {
  EXPECT_TRUE(parse_rational_list("").empty());
  auto v = parse_rational_list("1, -1/2,3");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[1], frac(-1, 2));
  EXPECT_THROW(parse_rational_list("1,,2"), ParseError);
}

TEST(Rational, FallingFactorial) {
  EXPECT_EQ(falling_factorial(5, 0), 1);
  EXPECT_EQ(falling_factorial(5, 2), 20);
  EXPECT_EQ(falling_factorial(3, 4), 0);
  EXPECT_EQ(factorial(25), Integer("15511210043330985984000000"));
}

TEST(Rational, SymmetricValues) {
  std::vector<Rational> v{1, 2, 3};
  auto e = elementary_values(v, 4);
  auto h = complete_values(v, 3);
  EXPECT_EQ(e, (std::vector<Rational>{1, 6, 11, 6, 0}));
  EXPECT_EQ(h, (std::vector<Rational>{1, 6, 25, 90}));
}
