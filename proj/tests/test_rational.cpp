#include "deltabound/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace deltabound;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("3/4")), "3/4");
  EXPECT_EQ(to_string(parse_rational("-6/8")), "-3/4");
  EXPECT_EQ(to_string(parse_rational(" 5 ")), "5");
  EXPECT_EQ(to_string(parse_rational("4/2")), "2");
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("x"), DomainError);
  EXPECT_THROW(parse_rational("1/"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
}

TEST(Rational, IntegerSquareRoots) {
  EXPECT_EQ(isqrt(Integer(0)), 0);
  EXPECT_EQ(isqrt(Integer(99)), 9);
  EXPECT_TRUE(is_perfect_square(Integer(144)));
  EXPECT_FALSE(is_perfect_square(Integer(-4)));
  EXPECT_THROW(isqrt(Integer(-1)), DomainError);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = rng() >> (rng() % 60);
    const std::uint64_t r = isqrt_u64(n);
    EXPECT_LE(static_cast<unsigned __int128>(r) * r, n);
    EXPECT_GT(static_cast<unsigned __int128>(r + 1) * (r + 1), n);
    EXPECT_EQ(is_perfect_square_u64(n), r * r == n);
    EXPECT_TRUE(is_perfect_square_u64(r * r));
  }
}

TEST(Rational, ExtendedAndInterval) {
  EXPECT_TRUE(Extended::infinity().is_infinite());
  EXPECT_EQ(Extended::infinity().str(), "+inf");
  EXPECT_EQ(Extended(Rational(3)).str(), "3");
  EXPECT_THROW(Extended::infinity().value(), DomainError);
  const auto iv = RationalInterval::make(Rational(3, 2), 2);
  EXPECT_EQ(iv.str(), "[3/2, 2]");
  EXPECT_EQ(iv.scaled(6).str(), "[9, 12]");
  EXPECT_TRUE(iv.contains(Rational(7, 4)));
  EXPECT_THROW(RationalInterval::make(2, 1), DomainError);
}

TEST(Rational, SimplestRationalBetween) {
  EXPECT_EQ(simplest_rational_between(Rational(1, 3), Rational(1, 2)), Rational(1, 2));
  EXPECT_EQ(simplest_rational_between(Rational(2, 7), Rational(3, 10)), Rational(2, 7));
  EXPECT_EQ(simplest_rational_between(Rational(-1, 2), Rational(1, 3)), Rational(0));
  EXPECT_EQ(simplest_rational_between(Rational(-3, 5), Rational(-4, 7)), Rational(-3, 5));
  // Property: result lies in the interval and no smaller denominator does.
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Rational a(static_cast<long>(rng() % 2000) - 1000, 1 + static_cast<long>(rng() % 97));
    const Rational b = a + Rational(1 + static_cast<long>(rng() % 50), 1 + static_cast<long>(rng() % 500));
    const Rational s = simplest_rational_between(a, b);
    ASSERT_TRUE(a <= s && s <= b);
    const Integer q = denominator_of(s);
    for (Integer den = 1; den < q; ++den) {
      // ceil(a * den) / den must exceed b.
      const Rational scaled = a * Rational(den);
      Integer c = numerator_of(scaled) / denominator_of(scaled);
      if (Rational(c) < scaled) c += 1;
      ASSERT_GT(Rational(c, den), b) << "denominator " << den << " fits in [" << to_string(a) << ", " << to_string(b) << "]";
    }
  }
}
