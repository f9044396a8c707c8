#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "latseg/numeric.hpp"

using namespace latseg;

TEST(Isqrt, SmallAndLarge) {
  EXPECT_EQ(isqrt(Integer(0)), 0);
  EXPECT_EQ(isqrt(Integer(24)), 4);
  EXPECT_EQ(isqrt(Integer(25)), 5);
  const Integer big = Integer(1) << 200;
  EXPECT_EQ(isqrt(big), Integer(1) << 100);
  EXPECT_EQ(isqrt(big - 1), (Integer(1) << 100) - 1);
  EXPECT_THROW(isqrt(Integer(-1)), DomainError);
}

TEST(FloorCeil, NegativeFractions) {
  EXPECT_EQ(floor(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil(Rational(-7, 2)), -3);
  EXPECT_EQ(floor(Rational(7, 2)), 3);
  EXPECT_EQ(ceil(Rational(7, 2)), 4);
  EXPECT_EQ(floor(Rational(-3)), -3);
  EXPECT_EQ(ceil(Rational(-3)), -3);
}

TEST(FloorSqrt, RationalArguments) {
  EXPECT_EQ(floor_sqrt(Rational(9, 4)), 1);
  EXPECT_EQ(ceil_sqrt(Rational(9, 4)), 2);
  EXPECT_EQ(floor_sqrt(Rational(4)), 2);
  EXPECT_EQ(ceil_sqrt(Rational(4)), 2);
  EXPECT_EQ(ceil_sqrt(Rational(0)), 0);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Rational x(static_cast<std::int64_t>(rng() % 100000), static_cast<std::int64_t>(rng() % 97 + 1));
    const Integer f = floor_sqrt(x), c = ceil_sqrt(x);
    EXPECT_LE(Rational(f * f), x);
    EXPECT_GT(Rational((f + 1) * (f + 1)), x);
    EXPECT_GE(Rational(c * c), x);
    if (c > 0) {
      EXPECT_LT(Rational((c - 1) * (c - 1)), x);
    }
  }
}

TEST(ExactSqrt, DetectsRationalSquares) {
  Rational root;
  EXPECT_TRUE(exact_sqrt(Rational(9, 16), root));
  EXPECT_EQ(root, Rational(3, 4));
  EXPECT_FALSE(exact_sqrt(Rational(2), root));
  EXPECT_FALSE(exact_sqrt(Rational(-4), root));
}

TEST(Gcd, IgnoresSignsAndZeros) {
  const std::vector<std::int64_t> v{0, -6, 9};
  EXPECT_EQ(gcd_of(v), 3);
  const std::vector<std::int64_t> z{0, 0};
  EXPECT_EQ(gcd_of(z), 0);
}

TEST(ParseRational, Forms) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("12"), Rational(12));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("-3e-2"), Rational(-3, 100));
  EXPECT_EQ(parse_rational(" 5/10 "), Rational(1, 2));
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
  EXPECT_EQ(to_string(Rational(-3, 4)), "-3/4");
  EXPECT_EQ(to_string(Rational(5)), "5");
}

TEST(FromDouble, IsExact) {
  EXPECT_EQ(from_double(0.5), Rational(1, 2));
  EXPECT_EQ(from_double(-0.75), Rational(-3, 4));
  EXPECT_EQ(to_double(from_double(0.1)), 0.1);
  EXPECT_THROW(from_double(std::nan("")), DomainError);
}

TEST(Interval, PointArithmeticStaysExact) {
  const Interval a(Rational(1, 3)), b(Rational(2, 7));
  EXPECT_TRUE((a + b).is_exact());
  EXPECT_EQ((a * b).lo(), Rational(2, 21));
  EXPECT_EQ((a / b).lo(), Rational(7, 6));
  EXPECT_THROW(a / Interval(0), PrecisionError);
}

TEST(Interval, SqrtOfSquareIsExact) {
  const Interval r = sqrt(Interval(Rational(49, 4)));
  EXPECT_TRUE(r.is_exact());
  EXPECT_EQ(r.lo(), Rational(7, 2));
}

// Property: the exact result of an operation on members stays enclosed.
TEST(Interval, EnclosureProperty) {
  std::mt19937_64 rng(11);
  auto rnd = [&] {
    return Rational(static_cast<std::int64_t>(rng() % 2001) - 1000, static_cast<std::int64_t>(rng() % 50 + 1));
  };
  for (int i = 0; i < 300; ++i) {
    Rational a0 = rnd(), a1 = rnd(), b0 = rnd(), b1 = rnd();
    if (a0 > a1) std::swap(a0, a1);
    if (b0 > b1) std::swap(b0, b1);
    const Interval A(a0, a1), B(b0, b1);
    const Rational x = a0 + (a1 - a0) / 3, y = b0 + (b1 - b0) * 2 / 5;
    EXPECT_TRUE((A + B).contains(x + y));
    EXPECT_TRUE((A - B).contains(x - y));
    EXPECT_TRUE((A * B).contains(x * y));
    if (b0 > 0 || b1 < 0) {
      EXPECT_TRUE((A / B).contains(x / y));
    }
    const Interval S = sqrt(abs(A));
    const Rational ax = x < 0 ? -x : x;
    EXPECT_LE(S.lo() * S.lo(), ax);
    EXPECT_GE(S.hi() * S.hi(), ax);
  }
}

TEST(Interval, SqrtWidthIsTiny) {
  const Interval r = sqrt(Interval(2));
  EXPECT_LT(r.width(), Rational(1, Integer(1) << 150));
  EXPECT_NEAR(to_double(r.mid()), std::sqrt(2.0), 1e-15);
}

TEST(Interval, CertainOrderings) {
  const Interval a(Rational(1), Rational(2)), b(Rational(2), Rational(3)), c(Rational(5, 2), Rational(4));
  EXPECT_TRUE(a.certainly_le(b));
  EXPECT_FALSE(a.certainly_lt(b));
  EXPECT_FALSE(b.certainly_le(c));
  EXPECT_TRUE(c.certainly_gt(a));
  EXPECT_THROW(Interval(Rational(2), Rational(1)), DomainError);
}

TEST(Norm, IntegerVector) {
  const std::vector<std::int64_t> v{3, 4};
  const Interval n = norm(v);
  EXPECT_TRUE(n.is_exact());
  EXPECT_EQ(n.lo(), 5);
}
