#include "deltabound/heights.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace deltabound;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::filesystem::path> bundled_models() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(DELTABOUND_MODELS_DIR))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

VarietyModel projective(int n) {
  return parse_variety(R"({"ambient_dim":)" + std::to_string(n) + R"(,"equations":[],"exclusions":[],"height_power":1})");
}

PointRecord pt(std::vector<std::int64_t> c) {
  std::int64_t h = 0;
  for (auto v : c) h = std::max(h, v < 0 ? -v : v);
  return {c, h, Integer(h)};
}

}  // namespace

TEST(Polynomial, ParseAndEvaluate) {
  const auto p = parse_polynomial("x0*x3 - x1*x2", 4);
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.evaluate({2, 3, 1, 6}), 9);
  const auto q = parse_polynomial("(x0 + x1)^3 - 2*x2^3", 3);
  EXPECT_EQ(q.evaluate({1, 1, 1}), 6);
  EXPECT_EQ(q.degree_in(0), 3);
  EXPECT_EQ(parse_polynomial("-x0^2 + - -x1", 2).str(), "-x0^2 + x1");
  EXPECT_EQ(parse_polynomial("x0 - x0", 1).str(), "0");
  EXPECT_FALSE(parse_polynomial("x0^2 - x1", 2).is_homogeneous());
}

TEST(Polynomial, ParseErrorsCarryPosition) {
  try {
    parse_polynomial("x0 +\n  y1", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(parse_polynomial("x2", 2), ParseError);
  EXPECT_THROW(parse_polynomial("x0^", 1), ParseError);
  EXPECT_THROW(parse_polynomial("x0^-1", 1), ParseError);
  EXPECT_THROW(parse_polynomial("x0^65", 1), ParseError);
  EXPECT_THROW(parse_polynomial("(x0", 1), ParseError);
  EXPECT_THROW(parse_polynomial("x0 x0", 1), ParseError);
  EXPECT_THROW(parse_polynomial("", 1), ParseError);
}

TEST(Variety, ParseModels) {
  const auto p1 = projective(1);
  EXPECT_EQ(p1.coordinate_count(), 2u);
  const auto quadric = parse_variety(R"({"ambient_dim":3,"equations":["x0*x3 - x1*x2"],"exclusions":[],"height_power":1})");
  EXPECT_EQ(quadric.equations.size(), 1u);
  EXPECT_THROW(parse_variety(R"({"ambient_dim":1,"equations":["x0^2 - x1"],"exclusions":[]})"), DomainError);
  EXPECT_THROW(parse_variety(R"({"ambient_dim":1,"equations":[],"colour":1})"), DomainError);
  EXPECT_THROW(parse_variety(R"({"ambient_dim":-1,"equations":[]})"), DomainError);
  EXPECT_THROW(parse_variety(R"({"ambient_dim":1,"height_power":0})"), DomainError);
  try {
    parse_variety("{\n  \"ambient_dim\": 1,\n  oops\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    parse_variety(R"({"ambient_dim":2,"equations":["x0 + x7"]})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("equations[0]"), std::string::npos);
  }
  for (const auto& path : bundled_models()) EXPECT_NO_THROW(parse_variety(slurp(path))) << path;
}

TEST(Enumerate, ProjectiveLineAndPlane) {
  const auto p1 = projective(1);
  const auto pts = enumerate_points(p1, 1);
  ASSERT_EQ(pts.size(), 4u);
  std::vector<std::string> names;
  for (const auto& p : pts) names.push_back(format_point(p.coords));
  EXPECT_EQ(names, (std::vector<std::string>{"(0:1)", "(1:-1)", "(1:0)", "(1:1)"}));
  EXPECT_EQ(enumerate_points(p1, 2).size(), 8u);
  EXPECT_EQ(enumerate_points(projective(2), 1).size(), 13u);
  const auto table = counting_series(p1, {1, 2});
  EXPECT_EQ(table.rows, (std::vector<std::pair<std::int64_t, std::uint64_t>>{{1, 4}, {2, 8}}));
  EXPECT_THROW(enumerate_points(p1, 0), DomainError);
  EXPECT_THROW(counting_series(p1, {2, 1}), DomainError);
}

TEST(Enumerate, DegenerateModelIsEmpty) {
  const auto m = parse_variety(R"({"ambient_dim":0,"equations":["x0"],"exclusions":[],"height_power":1})");
  const auto t = counting_series(m, {1, 2, 5, 10});
  for (const auto& [T, n] : t.rows) EXPECT_EQ(n, 0u) << T;
}

TEST(Enumerate, PointsArePrimitiveAndNormalized) {
  for (const auto& path : bundled_models()) {
    const auto m = parse_variety(slurp(path));
    for (const auto& p : enumerate_points(m, 12)) {
      std::int64_t g = 0;
      for (auto v : p.coords) g = std::gcd(g, v < 0 ? -v : v);
      EXPECT_EQ(g, 1);
      EXPECT_GT(*std::find_if(p.coords.begin(), p.coords.end(), [](std::int64_t v) { return v != 0; }), 0);
      std::vector<Integer> x(p.coords.begin(), p.coords.end());
      for (const auto& eq : m.equations) EXPECT_EQ(eq.evaluate(x), 0);
    }
  }
}

TEST(Enumerate, MatchesNaiveOracleOnBundledModels) {
  for (const auto& path : bundled_models()) {
    const auto m = parse_variety(slurp(path));
    const std::int64_t T = 10;
    const std::int64_t box = max_norm_bound(m, T);
    const auto naive = oracle::naive_shell_counts(m, box);
    std::vector<std::int64_t> ts;
    for (std::int64_t t = 1; t <= T; ++t) ts.push_back(t);
    const auto table = counting_series(m, ts);
    std::uint64_t prev = 0;
    for (const auto& [t, n] : table.rows) {
      std::uint64_t expected = 0;
      for (std::int64_t b = 1; b <= max_norm_bound(m, t); ++b) expected += naive[static_cast<std::size_t>(b)];
      EXPECT_EQ(n, expected) << path << " T=" << t;
      EXPECT_GE(n, prev);
      prev = n;
    }
  }
}

TEST(Enumerate, QuadricAgainstUnitBox) {
  const auto m = parse_variety(R"({"ambient_dim":3,"equations":["x0*x3 - x1*x2"],"exclusions":[],"height_power":1})");
  EXPECT_EQ(counting_series(m, {1}).rows[0].second, oracle::naive_shell_counts(m, 1)[1]);
}

TEST(Enumerate, ShardMergeIsThreadIndependent) {
  for (const auto& path : bundled_models()) {
    const auto m = parse_variety(slurp(path));
    const auto one = enumerate_points(m, 15, {1, 100'000'000});
    for (int threads : {2, 3, 8}) {
      EXPECT_EQ(enumerate_points(m, 15, {threads, 100'000'000}), one) << path << " threads " << threads;
      EXPECT_EQ(shell_counts(m, 15, {threads, 100'000'000}), shell_counts(m, 15)) << path;
    }
  }
}

TEST(Enumerate, ResourceCap) {
  EXPECT_THROW(enumerate_points(projective(2), 50, {1, 1000}), ResourceLimitError);
  EXPECT_THROW(shell_counts(projective(2), 50, {4, 1000}), ResourceLimitError);
}

TEST(Fit, Slopes) {
  CountTable flat;
  for (std::int64_t t = 1; t <= 100; ++t) flat.rows.emplace_back(t, 7);
  EXPECT_NEAR(fit_exponent(flat).slope, 0.0, 1e-12);
  CountTable cube;
  for (std::int64_t t = 1; t <= 100; ++t) cube.rows.emplace_back(t, static_cast<std::uint64_t>(t * t * t));
  const auto f = fit_exponent(cube);
  EXPECT_NEAR(f.slope, 3.0, 1e-9);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-9);
  CountTable few{{{1, 1}, {2, 2}}};
  EXPECT_THROW(fit_exponent(few), DomainError);
}

TEST(Distance, Examples) {
  EXPECT_EQ(proj_distance(pt({1, 0}), pt({0, 1})), 1);
  EXPECT_EQ(proj_distance(pt({2, 3}), pt({2, 3})), 0);
  EXPECT_EQ(proj_distance(pt({1, 0}), pt({1, 1})), Rational(1, 2));
}

TEST(Distance, MetricProperties) {
  std::mt19937_64 rng(99);
  const auto rnd = [&] {
    std::vector<std::int64_t> c(3);
    do {
      for (auto& v : c) v = static_cast<std::int64_t>(rng() % 21) - 10;
    } while (std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; }));
    return pt(c);
  };
  for (int i = 0; i < 2000; ++i) {
    const auto p = rnd(), q = rnd(), r = rnd();
    const Rational pq = proj_distance(p, q), qr = proj_distance(q, r), pr = proj_distance(p, r);
    EXPECT_EQ(pq, proj_distance(q, p));
    EXPECT_GE(pq, 0);
    EXPECT_LE(pq, 1);
    EXPECT_EQ(proj_distance(p, p), 0);
    EXPECT_TRUE(sqrt_triangle_holds(pr, pq, qr));
    // Scaling a representative does not move the point.
    PointRecord scaled = p;
    for (auto& v : scaled.coords) v *= -3;
    EXPECT_EQ(proj_distance(p, scaled), 0);
  }
  EXPECT_FALSE(sqrt_triangle_holds(1, Rational(1, 10), Rational(1, 10)));
  EXPECT_TRUE(sqrt_triangle_holds(1, Rational(1, 4), Rational(1, 4)));  // 1 = 1/2 + 1/2
}

TEST(Repulsion, MatchesNaiveScan) {
  for (int n : {1, 2}) {
    const auto m = projective(n);
    for (std::int64_t T : {3, 6}) {
      const auto r = repulsion_scan(m, 1, 0, T);
      EXPECT_EQ(r.power, 1);
      EXPECT_EQ(r.min_value, oracle::naive_min_product_delta1(enumerate_points(m, T))) << n << " " << T;
      EXPECT_NE(r.p, r.q);
    }
  }
}

TEST(Repulsion, FloorAndThreadIndependence) {
  const auto p1 = projective(1);
  for (std::int64_t T : {10, 20, 50}) {
    const auto r = repulsion_scan(p1, 1, 0, T);
    EXPECT_GE(r.min_value, Rational(1, 4)) << T;
    const auto r8 = repulsion_scan(p1, 1, 0, T, {8, 100'000'000});
    EXPECT_EQ(r8.min_value, r.min_value);
    EXPECT_EQ(r8.p, r.p);
    EXPECT_EQ(r8.q, r.q);
  }
  EXPECT_GE(repulsion_scan(projective(2), 1, 0, 5).min_value, Rational(1, 9));
}

TEST(Repulsion, FractionalExponentAndBigPath) {
  // 2(delta + eps) = 3/2: the value is reported to the power b = 2.
  const auto r = repulsion_scan(projective(1), Rational(1, 2), Rational(1, 4), 8);
  EXPECT_EQ(r.power, 2);
  EXPECT_EQ(r.exponent, Rational(3, 2));
  // Large exponent forces the big-integer path; compare with a direct evaluation at the witness.
  const auto big = repulsion_scan(projective(2), 7, 0, 9);
  const Integer hh = big.p.height * big.q.height;
  EXPECT_EQ(big.min_value, proj_distance(big.p, big.q) * Rational(boost::multiprecision::pow(hh, 14)));
  EXPECT_THROW(repulsion_scan(projective(1), -1, 0, 5), DomainError);
  const auto lonely = parse_variety(R"({"ambient_dim":1,"equations":["x0"],"exclusions":[]})");
  EXPECT_THROW(repulsion_scan(lonely, 1, 0, 5), DomainError);
}
