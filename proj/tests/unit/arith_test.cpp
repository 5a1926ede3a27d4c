#include "seifert/arith.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace seifert;

TEST(Arith, FloorDivisionRoundsDown) {
  EXPECT_EQ(floor_div(7, 3), 2);
  EXPECT_EQ(floor_div(-7, 3), -3);
  EXPECT_EQ(floor_div(-6, 3), -2);
  EXPECT_EQ(floor_div(0, 5), 0);
}

TEST(Arith, ModFloorIsInRange) {
  for (std::int64_t m = 1; m <= 9; ++m)
    for (std::int64_t a = -40; a <= 40; ++a) {
      auto r = mod_floor(a, m);
      EXPECT_GE(r, 0);
      EXPECT_LT(r, m);
      EXPECT_EQ((a - r) % m, 0);
    }
}

TEST(Arith, ModInverseAgreesWithSearch) {
  for (std::int64_t m = 2; m <= 30; ++m)
    for (std::int64_t a = -35; a <= 35; ++a) {
      if (std::gcd(a, m) != 1) continue;
      std::int64_t expected = 0;
      while (mod_floor(a * expected, m) != 1) ++expected;
      EXPECT_EQ(mod_inverse(a, m), expected) << a << " mod " << m;
    }
}

TEST(Arith, RationalsStayReduced) {
  Rational r = make_rational(6, -4);
  EXPECT_EQ(numerator_of(r), -3);
  EXPECT_EQ(denominator_of(r), 2);
  EXPECT_EQ(to_string(r), "-3/2");
  EXPECT_EQ(to_string(make_rational(4, 2)), "2");
  EXPECT_EQ(sign_of(make_rational(0, 7)), 0);
  EXPECT_EQ(sign_of(make_rational(-1, 7)), -1);
}

TEST(Arith, BigIntDoesNotOverflow) {
  BigInt x = 1;
  for (int i = 0; i < 100; ++i) x *= 10;
  EXPECT_EQ(x.str().size(), 101u);
}
