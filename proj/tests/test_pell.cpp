#include "deltabound/pell.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace deltabound;

TEST(Pell, SmallFundamentalSolutions) {
  const auto check = [](std::int64_t D, int x, int y) {
    const auto s = pell_fundamental(D);
    EXPECT_EQ(s.x, x) << D;
    EXPECT_EQ(s.y, y) << D;
  };
  check(2, 3, 2);
  check(3, 2, 1);
  check(5, 9, 4);
  check(7, 8, 3);
  const auto big = pell_fundamental(61);
  EXPECT_EQ(big.x, Integer("1766319049"));
  EXPECT_EQ(big.y, Integer("226153980"));
  EXPECT_THROW(pell_fundamental(4), DomainError);
  EXPECT_THROW(pell_fundamental(0), DomainError);
  EXPECT_THROW(pell_fundamental(-3), DomainError);
}

TEST(Pell, PeriodEndNorm) {
  for (std::int64_t D = 2; D <= 300; ++D) {
    if (is_perfect_square_u64(static_cast<std::uint64_t>(D))) continue;
    const auto cf = sqrt_continued_fraction(D);
    const Integer norm = cf.p_end * cf.p_end - D * cf.q_end * cf.q_end;
    EXPECT_TRUE(norm == 1 || norm == -1) << D;
    EXPECT_EQ(norm, cf.norm_end) << D;
    EXPECT_EQ(norm == -1, cf.period.size() % 2 == 1) << D;
  }
}

TEST(Pell, AgreesWithChakravala) {
  for (std::int64_t D = 2; D <= 1000; ++D) {
    if (is_perfect_square_u64(static_cast<std::uint64_t>(D))) continue;
    const auto s = pell_fundamental(D);
    const auto [x, y] = oracle::pell_chakravala(D);
    ASSERT_EQ(s.x, x) << D;
    ASSERT_EQ(s.y, y) << D;
  }
}

TEST(GeneralPell, SpecExamples) {
  EXPECT_FALSE(pell_general_min_even(1).has_value());
  EXPECT_FALSE(pell_general_min_even(2).has_value());
  EXPECT_FALSE(pell_general_min_even(5).has_value());
  EXPECT_THROW(pell_general_min_even(0), DomainError);
}

TEST(GeneralPell, EvenBranchNeverReachedByScan) {
  // x^2 = 5 + 4 d y^2 with y even forces x^2 = 5 (mod 16).
  for (std::uint64_t d = 1; d <= 500; ++d) {
    EXPECT_FALSE(oracle::general_pell_even_scan(d, 10'000).has_value()) << d;
    EXPECT_FALSE(pell_general_min_even(static_cast<std::int64_t>(d)).has_value()) << d;
  }
}

TEST(GeneralPell, OddSolutionsExistWhereScanFindsThem) {
  // Sanity on the oracle itself: d = 1 has (3, 1), d = 11 has (7, 1).
  EXPECT_EQ(oracle::general_pell_any_scan(1, 10)->first, 3u);
  EXPECT_EQ(oracle::general_pell_any_scan(11, 10)->first, 7u);
}

TEST(K3, SpecValues) {
  auto r = k3_s_invariant(1);
  EXPECT_EQ(r.branch, SBranch::kSquareD);
  EXPECT_EQ(r.value.str(), "1");
  EXPECT_EQ(r.value.squared(), 1);
  r = k3_s_invariant(2);
  EXPECT_EQ(r.branch, SBranch::kPellUnit);
  EXPECT_EQ(r.value.str(), "3/4");
  EXPECT_TRUE(r.bound_ok);
  r = k3_s_invariant(3);
  EXPECT_EQ(r.value.str(), "2/3");
  EXPECT_TRUE(r.sub_bound_tight);
  EXPECT_EQ(k3_s_invariant(5).value.str(), "9/20");
  EXPECT_EQ(k3_exponent(1).exponent.str(), "4");
  EXPECT_EQ(k3_exponent(2).exponent.str(), "3");
  EXPECT_EQ(k3_exponent(4).exponent.str(), "2");
  EXPECT_EQ(k3_exponent(4).s.branch, SBranch::kSquareD);
  EXPECT_TRUE(k3_exponent(4).exponent_bound_check);
  EXPECT_EQ(k3_exponent(2).s.value.symbolic(), "3/4");
  EXPECT_EQ(k3_s_invariant(9).value.symbolic(), "1/sqrt(9)");
  EXPECT_EQ(k3_s_invariant(9).value.str(), "1/3");
  EXPECT_THROW(k3_s_invariant(0), DomainError);
}

TEST(K3, MatchesScanOracle) {
  for (std::int64_t d = 1; d <= 600; ++d)
    ASSERT_EQ(k3_s_invariant(d).value.squared(), oracle::k3_s_squared(static_cast<std::uint64_t>(d))) << d;
}

TEST(K3, SquareBranchIsAntitone) {
  Rational prev = 100;
  for (std::int64_t m = 1; m * m <= 10'000; ++m) {
    const auto e = k3_exponent(m * m);
    ASSERT_EQ(e.s.branch, SBranch::kSquareD);
    const Rational sq = e.exponent.squared();
    EXPECT_LT(sq, prev);
    prev = sq;
  }
}

TEST(Enriques, Values) {
  EXPECT_EQ(enriques_bound(1), Rational(2, 3));
  EXPECT_EQ(enriques_bound(2), Rational(1, 2));
  EXPECT_EQ(enriques_bound(6), Rational(1, 4));
  EXPECT_EQ(enriques_exponent(2), 2);
  EXPECT_THROW(enriques_bound(0), DomainError);
}
