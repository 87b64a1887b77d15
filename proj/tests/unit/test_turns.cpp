#include <gtest/gtest.h>

#include <numbers>

#include "ontolab/errors.hpp"
#include "ontolab/turns.hpp"

namespace ontolab {
namespace {

TEST(Turns, DyadicNormalizesToOddNumerator) {
  const Turns t = Turns::dyadic(12, 5);  // 12/32 = 3/8
  EXPECT_EQ(t.numerator(), 3);
  EXPECT_EQ(t.exponent(), 3u);
  EXPECT_EQ(t.to_string(), "3/2^3");
}

TEST(Turns, ReducesModuloOne) {
  EXPECT_EQ(Turns::dyadic(9, 3), Turns::dyadic(1, 3));
  EXPECT_EQ(Turns::dyadic(-1, 2), Turns::dyadic(3, 2));
  EXPECT_EQ(Turns::dyadic(8, 3), Turns());
}

TEST(Turns, FromFractionIsExact) {
  const Turns t = Turns::from_fraction(0.375L);
  EXPECT_EQ(t, Turns::dyadic(3, 3));
  EXPECT_EQ(Turns::from_fraction(1.25L), Turns::dyadic(1, 2));
}

TEST(Turns, TinyNegativeOffsetsAreExact) {
  const Turns c = Turns::from_fraction(0.6L);
  EXPECT_EQ(c.shifted(-1e-21L).shifted(1e-21L), c);
  EXPECT_EQ(Turns::from_fraction(-0.25L), Turns::dyadic(3, 2));
  EXPECT_EQ(Turns::from_fraction(-1e-30L).signed_difference(Turns()), 1e-30L);
}

TEST(Turns, RadiansRoundTrip) {
  const Turns t = Turns::from_radians(1.0L);
  EXPECT_NEAR(t.radians(), 1.0, 1e-15);
  EXPECT_NEAR(Turns::dyadic(1, 1).radians(), std::numbers::pi, 1e-15);
}

TEST(Turns, SignedDifferenceInHalfOpenRange) {
  const Turns a = Turns::dyadic(1, 3);
  const Turns b = Turns::dyadic(7, 3);
  EXPECT_DOUBLE_EQ(static_cast<double>(a.signed_difference(b)), -0.25);
  EXPECT_DOUBLE_EQ(static_cast<double>(b.signed_difference(a)), 0.25);
  EXPECT_DOUBLE_EQ(static_cast<double>(Turns().signed_difference(Turns::dyadic(1, 1))), -0.5);
}

TEST(Turns, DeepDifferencesStayExact) {
  // Angles 3000 binary places deep differ by exactly 2^-3000.
  const BigInt k = (BigInt(1) << 2999) + 1;
  const Turns a = Turns::dyadic(k, 3000);
  const Turns b = Turns::dyadic(k + 1, 3000);
  const long double d = a.signed_difference(b);
  EXPECT_EQ(d, std::ldexp(1.0L, -3000));
}

TEST(Turns, ArithmeticAndOrdering) {
  const Turns a = Turns::dyadic(1, 2);
  const Turns b = Turns::dyadic(1, 3);
  EXPECT_EQ(a + b, Turns::dyadic(3, 3));
  EXPECT_EQ(a - b, Turns::dyadic(1, 3));
  EXPECT_LT(b, a);
  EXPECT_EQ(a.shifted(0.25L), Turns::dyadic(1, 1));
}

TEST(Turns, ParseRoundTrip) {
  const Turns t = Turns::dyadic(BigInt("123456789012345678901234567890123"), 140);
  EXPECT_EQ(Turns::parse(t.to_string()), t);
  EXPECT_EQ(Turns::parse("0"), Turns());
  EXPECT_THROW(Turns::parse("three/2^4"), InputError);
}

}  // namespace
}  // namespace ontolab
