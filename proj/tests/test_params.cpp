#include <gtest/gtest.h>

#include "frobschur/params.hpp"

using namespace frobschur;

TEST(Params, Kinds) {
  auto z = ParamSequence::zero();
  EXPECT_EQ(z[5], 0);
  EXPECT_EQ(z.shift(3), z);
  EXPECT_EQ(z.dual(), z);
  auto s = ParamSequence::special();
  EXPECT_EQ(s[1], frac(1, 2));
  EXPECT_EQ(s[0], frac(-1, 2));
  EXPECT_EQ(s.shift(1)[1], frac(3, 2));
  EXPECT_EQ(s.shift(-1)[1], frac(-1, 2));
  EXPECT_EQ(s.dual(), s);
  for (long i = -5; i <= 5; ++i) EXPECT_EQ(s.dual()[i], -s[1 - i]);
}

TEST(Params, CustomShiftDual) {
  auto a = parse_params("custom:-1=1/3,0=0,1=2,3=-5");
  EXPECT_EQ(a[-1], frac(1, 3));
  EXPECT_EQ(a[2], 0);  // unlisted but inside the window
  EXPECT_EQ(a.window_lo(), -1);
  EXPECT_EQ(a.window_hi(), 3);
  EXPECT_THROW(a.at(4), WindowExceeded);
  auto b = a.shift(2);
  for (long i = -3; i <= 1; ++i) EXPECT_EQ(b[i], a[i + 2]);
  auto d = a.dual();
  for (long i = -2; i <= 2; ++i) EXPECT_EQ(d[i], -a[1 - i]);
  EXPECT_EQ(d.dual(), a);
  EXPECT_EQ(a.shift(3).shift(-3), a);
}

TEST(Params, WindowPolicy) {
  auto a = parse_params("custom:0=1,1=2", WindowPolicy::permissive);
  EXPECT_FALSE(a.window_exceeded());
  EXPECT_EQ(a[7], 0);
  EXPECT_TRUE(a.window_exceeded());
  EXPECT_TRUE(a.shift(1).window_exceeded());  // shared with derived sequences
  a.clear_window_flag();
  auto fresh = a.detached(WindowPolicy::permissive);
  fresh.at(-9);
  EXPECT_FALSE(a.window_exceeded());
  EXPECT_TRUE(fresh.window_exceeded());
  try {
    parse_params("custom:0=1").at(2);
    FAIL();
  } catch (const WindowExceeded& e) {
    EXPECT_EQ(e.index(), 2);
  }
}

TEST(Params, Parse) {
  EXPECT_EQ(parse_params(" zero "), ParamSequence::zero());
  EXPECT_EQ(parse_params("special"), ParamSequence::special());
  for (auto bad : {"", "zeros", "custom:", "custom:1", "custom:a=1", "custom:1=x", "custom:1=1,1=2", "custom:1=1/0"})
    EXPECT_THROW(parse_params(bad), ParseError) << bad;
  EXPECT_EQ(to_string(parse_params("custom:-1=1/3,1=2")), "custom:-1=1/3,0=0,1=2");
  EXPECT_EQ(to_string(ParamSequence::special().shift(2)), "special(shift 2)");
  EXPECT_EQ(parse_params(to_string(parse_params("custom:-1=1/3,1=2"))), parse_params("custom:-1=1/3,1=2"));
}
