#include "oracle.hpp"
#include "qgt/sampler.hpp"

#include <gtest/gtest.h>

using namespace qgt;
using oracle::canon;
using oracle::cfg;

TEST(Sampler, Determinism) {
  auto p = canon();
  auto x = cfg("-:0,+:3,+:1,+:0");
  LinkSampler s1(p), s2(p);
  RngState r1(42), r2(42), r3(43);
  LinkSampler s3(p);
  bool differs = false;
  for (int i = 0; i < 200; ++i) {
    auto a = s1.sample_chain(x, 1, r1).trajectory;
    EXPECT_EQ(a, s2.sample_chain(x, 1, r2).trajectory);
    differs = differs || a != s3.sample_chain(x, 1, r3).trajectory;
  }
  EXPECT_TRUE(differs);
  RngState a(7, 0), b(7, 1);
  EXPECT_NE(a.next(), b.next());
}

TEST(Sampler, DeterministicSupport) {
  auto p = canon();
  LinkSampler s(p);
  RngState rng(1);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(s.sample_link(cfg("+:1,+:0"), rng), cfg("+:0"));
}

TEST(Sampler, LinkFrequency) {
  auto p = canon();
  LinkSampler s(p);
  RngState rng(2024);
  long hits = 0;
  const long n = 30000;
  for (long i = 0; i < n; ++i) hits += s.sample_link(cfg("+:2,+:0"), rng) == cfg("+:0");
  EXPECT_NEAR(static_cast<double>(hits) / n, 2.0 / 3.0, 0.01);
}

TEST(Sampler, ChainTrajectoryInterlaces) {
  auto p = canon();
  LinkSampler s(p);
  RngState rng(5);
  auto x = cfg("-:1,-:3,+:2,+:1,+:0");
  for (int i = 0; i < 100; ++i) {
    auto c = s.sample_chain(x, 2, rng);
    ASSERT_EQ(c.trajectory.size(), 4u);
    for (std::size_t j = 0; j + 1 < c.trajectory.size(); ++j)
      EXPECT_TRUE(interlaces(c.trajectory[j], c.trajectory[j + 1]));
    EXPECT_EQ(c.result, c.trajectory.back());
  }
  auto single = s.sample_chain(cfg("+:2,+:0"), 1, rng);
  EXPECT_EQ(single.trajectory.size(), 2u);
}

TEST(Sampler, ChiSquareAgainstTelescope) {
  auto p = canon();
  auto x = cfg("+:3,+:2,+:0");
  auto exact = telescope<Rational>(x, 1, Rational(0), p);
  LinkSampler s(p);
  RngState rng(99);
  std::map<Config, long> counts;
  const long n = 30000;
  for (long i = 0; i < n; ++i) ++counts[s.sample_chain(x, 1, rng).result];
  EXPECT_GT(chi_square_test(counts, exact, n).p_value, 0.001);
  // A wrong table is rejected.
  auto skewed = exact;
  skewed.atoms.begin()->second += Rational(1, 10);
  skewed.atoms.rbegin()->second -= Rational(1, 10);
  EXPECT_LT(chi_square_test(counts, skewed, n).p_value, 0.001);
}

TEST(Sampler, MomentZScores) {
  auto p = canon();
  EXPECT_EQ(empirical_moment_test(cfg("+:3,+:2,+:0"), 2, Partition(), 1000, 1, p).z, 0.0);
  EXPECT_LT(std::fabs(empirical_moment_test(cfg("+:3,+:2,+:0"), 2, Partition({1}), 100000, 2, p).z), 4.0);
  EXPECT_LT(std::fabs(empirical_moment_test(cfg("-:0,+:0"), 1, Partition({1}), 100000, 3, p).z), 4.0);
}
