#include "deltabound/fano_db.hpp"

#include <gtest/gtest.h>

using namespace deltabound;

TEST(FanoTable, Lookups) {
  const auto& e31 = lookup(2, 31);
  EXPECT_EQ(e31.six_delta.str(), "3");
  ASSERT_TRUE(e31.two_alpha);
  EXPECT_EQ(e31.two_alpha->str(), "5/3");
  EXPECT_EQ(e31.anticanonical_degree, 46);
  const auto& e24 = lookup(2, 24);
  EXPECT_EQ(e24.six_delta.str(), "≤ 6");
  EXPECT_EQ(e24.two_alpha->str(), "≤ 5");
  EXPECT_EQ(e24.six_delta.kind, TableValue::Kind::kUpperBound);
  EXPECT_EQ(lookup(4, 6).six_delta.str(), "3");
  EXPECT_EQ(lookup(4, 6).two_alpha->str(), "2");
  EXPECT_THROW(lookup(2, 1), DomainError);
  EXPECT_THROW(lookup(11, 1), DomainError);
}

TEST(FanoTable, ProductRowsFromDelPezzoValues) {
  EXPECT_EQ(lookup(6, 1).six_delta.str(), "3");    // P^1 x S_5
  EXPECT_EQ(lookup(8, 1).six_delta.str(), "4");    // P^1 x S_3, delta 2/3
  EXPECT_EQ(lookup(9, 1).six_delta.str(), "6");    // P^1 x S_2, delta 1
  EXPECT_EQ(lookup(10, 1).six_delta.str(), "[9, 12]");
  EXPECT_EQ(fano_table().size(), 53u);
}

TEST(FanoTable, EmbeddedDataRoundTripsByteForByte) {
  const std::string text = embedded_fano_json();
  const auto entries = parse_fano_table(text);
  EXPECT_EQ(serialize_fano_table(entries), text);
  EXPECT_EQ(parse_fano_table(serialize_fano_table(fano_table())), fano_table());
}

TEST(FanoTable, TableValueParsing) {
  for (const char* s : {"3", "5/3", "≤ 6", "[9, 12]"}) EXPECT_EQ(TableValue::parse(s).str(), s);
  EXPECT_EQ(TableValue::parse("≤ 6").proven_upper(), 6);
  EXPECT_THROW(TableValue::parse("[2, 1]"), DomainError);
  EXPECT_THROW(TableValue::parse("about 3"), DomainError);
}

TEST(FanoTable, UpperBoundCellsAreNotExact) {
  for (const auto& e : fano_table()) {
    if (e.six_delta.kind == TableValue::Kind::kUpperBound) {
      EXPECT_FALSE(e.six_delta.is_exact());
    }
    if (e.picard_rank <= 5 && e.six_delta.is_exact()) {
      EXPECT_EQ(e.six_delta.hi, 3) << e.picard_rank << "," << e.mm_number;
    }
  }
}

TEST(FanoBounds, Anticanonical) {
  const auto b31 = bound_anticanonical(lookup(2, 31));
  ASSERT_EQ(b31.size(), 2u);
  EXPECT_EQ(b31[0].exponent, 3);
  EXPECT_EQ(b31[1].exponent, Rational(5, 3));
  EXPECT_TRUE(b31[1].best);
  EXPECT_FALSE(b31[0].best);
  const auto best = [](const std::vector<BoundStatement>& v) {
    return std::find_if(v.begin(), v.end(), [](const BoundStatement& b) { return b.best; })->exponent;
  };
  EXPECT_EQ(best(bound_anticanonical(lookup(4, 6))), 2);
  EXPECT_EQ(best(bound_anticanonical(lookup(3, 23))), Rational(5, 3));
  const auto b24 = bound_anticanonical(lookup(2, 24));
  EXPECT_TRUE(b24[0].from_upper_bound);
  for (const auto& b : b24) EXPECT_TRUE(b.epsilon_required && b.open_subset_caveat);
}

TEST(FanoBounds, Twisted) {
  EXPECT_EQ(bound_twisted(Rational(1, 2), 1).exponent, 1);
  EXPECT_THROW(bound_twisted(Rational(1, 2), Rational(1, 2)), DomainError);
  EXPECT_EQ(bound_twisted(Rational(2, 3), Rational(3, 4)).exponent, Rational(4, 3));
  EXPECT_EQ(bound_twisted(lookup(2, 31), 1).exponent, 1);
  EXPECT_THROW(bound_twisted(lookup(2, 24), 5), DomainError);
  EXPECT_THROW(bound_twisted(0, 5), DomainError);
}

TEST(FanoVerify, CertificateRowsPass) {
  int verified = 0;
  for (const auto& e : fano_table()) {
    if (!e.certificates) continue;
    const auto r = verify_entry(e);
    EXPECT_TRUE(r.ok()) << e.picard_rank << "," << e.mm_number << ": "
                        << (r.mismatches.empty() ? std::string() : r.mismatches.front());
    EXPECT_FALSE(r.assumptions.empty());
    ++verified;
  }
  EXPECT_EQ(verified, 5);
  const auto r31 = verify_entry(lookup(2, 31));
  EXPECT_GE(r31.matches.size(), 2u);
}

TEST(FanoVerify, CorruptedCertificateIsReported) {
  auto certs = fano_certificates("conic-3-12");
  certs.alpha.constraints[0].bound += 1;
  const auto r = verify_entry(lookup(3, 12), certs);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.mismatches.empty());

  auto broken = fano_certificates("conic-2-31");
  broken.upper.decompositions[0][0].coefficient += 1;
  EXPECT_FALSE(verify_entry(lookup(2, 31), broken).ok());

  // Certificates attached to the wrong row disagree with its cells.
  EXPECT_FALSE(verify_entry(lookup(3, 12), fano_certificates("conic-2-32")).ok());
  EXPECT_THROW(fano_certificates("conic-9-9"), DomainError);
  EXPECT_FALSE(verify_entry(lookup(2, 24)).ok());  // nothing to check
}
