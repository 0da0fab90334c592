#include "oracle.hpp"
#include "qgt/lattice.hpp"

#include <gtest/gtest.h>

using namespace qgt;
using oracle::canon;
using oracle::cfg;

TEST(Lattice, ValueOfPoints) {
  auto p = canon();
  EXPECT_EQ(value(LatticePoint::plus(0), p), Rational(1));
  EXPECT_EQ(value(LatticePoint::plus(2), p), Rational(1, 4));
  EXPECT_EQ(value(LatticePoint::minus(1), p), Rational(-1, 2));
  EXPECT_EQ(value(LatticePoint::plus(-3), p), Rational(8));
}

TEST(Lattice, RejectsBadParams) {
  EXPECT_THROW(QParams(Rational(1), Rational(1), Rational(-1)), std::invalid_argument);
  EXPECT_THROW(QParams(Rational(1, 2), Rational(-1), Rational(-1)), std::invalid_argument);
  EXPECT_THROW(QParams(Rational(1, 2), Rational(1), Rational(1)), std::invalid_argument);
}

TEST(Lattice, OrderMatchesValues) {
  auto p = QParams(Rational(1, 3), Rational(2), Rational(-5, 7));
  std::vector<LatticePoint> pts;
  for (long n = -4; n <= 4; ++n) {
    pts.push_back(LatticePoint::plus(n));
    pts.push_back(LatticePoint::minus(n));
  }
  for (auto& a : pts)
    for (auto& b : pts) EXPECT_EQ(a < b, oracle::val(a, p) < oracle::val(b, p));
}

TEST(Lattice, IntervalCases) {
  auto P = LatticePoint::plus;
  auto M = LatticePoint::minus;
  EXPECT_TRUE(interval_contains(P(2), P(0), P(1)));
  EXPECT_TRUE(interval_contains(P(2), P(0), P(0)));
  EXPECT_FALSE(interval_contains(P(2), P(0), P(2)));
  EXPECT_TRUE(interval_contains(M(0), P(0), M(0)));
  EXPECT_TRUE(interval_contains(M(0), P(0), P(3)));
  EXPECT_TRUE(interval_contains(M(0), M(2), M(0)));
  EXPECT_FALSE(interval_contains(M(0), M(2), M(2)));
  EXPECT_THROW(interval_contains(P(0), P(2), P(1)), std::invalid_argument);
}

TEST(Lattice, IntervalReflectionSymmetry) {
  // Reflection swaps the rays; with zeta_+ = -zeta_- the exponents carry over.
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long y = -4; y <= 4; ++y)
        for (int sa : {-1, 1})
          for (int sb : {-1, 1})
            for (int sy : {-1, 1}) {
              LatticePoint pa{Sign(sa), a}, pb{Sign(sb), b}, py{Sign(sy), y};
              if (!(pa < pb)) continue;
              LatticePoint ra{Sign(-sb), b}, rb{Sign(-sa), a}, ry{Sign(-sy), y};
              EXPECT_EQ(interval_contains(pa, pb, py), interval_contains(ra, rb, ry));
            }
}

TEST(Lattice, Interlacing) {
  EXPECT_TRUE(interlaces(cfg("+:2,+:0"), cfg("+:1")));
  EXPECT_FALSE(interlaces(cfg("+:2,+:0"), cfg("+:2")));
  EXPECT_TRUE(interlaces(cfg("-:0,+:0"), cfg("+:4")));
  EXPECT_THROW(interlaces(cfg("+:2,+:0"), cfg("+:1,+:0")), std::invalid_argument);
}

TEST(Lattice, InterlacingBoundsByOracle) {
  auto p = canon();
  std::vector<Config> kids;
  oracle::all_children(cfg("+:5,+:3,+:2,+:0"), kids);
  for (auto& y : kids) {
    EXPECT_TRUE(interlaces(cfg("+:5,+:3,+:2,+:0"), y));
    EXPECT_LE(value(LatticePoint::plus(5), p), value(y[0], p));
  }
}

TEST(Lattice, EnumerateInterval) {
  auto p = canon();
  auto P = LatticePoint::plus;
  auto M = LatticePoint::minus;
  auto pts = enumerate_interval(P(2), P(0), Rational(0), p);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(value(pts[0], p), Rational(1, 2));
  EXPECT_EQ(value(pts[1], p), Rational(1));

  auto mixed = enumerate_interval(M(0), P(0), Rational(1, 4), p);
  std::vector<Rational> expect{-1, Rational(-1, 2), Rational(-1, 4), Rational(1, 4), Rational(1, 2), 1};
  ASSERT_EQ(mixed.size(), expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) EXPECT_EQ(value(mixed[i], p), expect[i]);

  EXPECT_THROW(enumerate_interval(M(0), P(0), Rational(0), p), std::domain_error);
}

TEST(Lattice, SingleRayIntervalSize) {
  auto p = canon();
  for (long a = -3; a <= 5; ++a)
    for (long b = a + 1; b <= 6; ++b)
      EXPECT_EQ(enumerate_interval(LatticePoint::plus(b), LatticePoint::plus(a), Rational(0), p).size(),
                static_cast<std::size_t>(b - a));
}

TEST(Lattice, TextCodes) {
  auto c = parse_config("+:2, -:1,+:0");
  EXPECT_EQ(to_code(c), "-:1,+:2,+:0");
  EXPECT_THROW(parse_config("+:2,+:2"), std::invalid_argument);
  EXPECT_THROW(parse_point("*:1"), std::invalid_argument);
  EXPECT_THROW(parse_point("+:x"), std::invalid_argument);
  EXPECT_TRUE(parse_config("").empty());
}
