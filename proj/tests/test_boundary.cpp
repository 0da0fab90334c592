#include "oracle.hpp"
#include "qgt/boundary.hpp"

#include <gtest/gtest.h>

using namespace qgt;
using oracle::canon;
using oracle::cfg;

namespace {
const Rational kMin20 = Rational(1, 1 << 20);
const Rational kMin28 = Rational(1, 1 << 28);
}  // namespace

TEST(Boundary, SinglePointFamily) {
  auto p = canon();
  auto fam = extreme_family(cfg("+:0"), 1, kMin28, p, 1e-12);
  const auto& m1 = fam.levels.at(1);
  Real total(0);
  for (auto& [c, w] : m1.atoms) total += w;
  EXPECT_NEAR(to_double(total), 1.0, 1e-12);
  // q^n (q^{n+1}; q)_inf.
  for (long n = 0; n < 10; ++n) {
    double expect = std::ldexp(1.0, static_cast<int>(-n));
    for (long i = n + 1; i < 200; ++i) expect *= 1 - std::ldexp(1.0, static_cast<int>(-i));
    EXPECT_NEAR(to_double(m1.weight(Config(std::vector<LatticePoint>{LatticePoint::plus(n)}))), expect, 1e-12);
  }
  EXPECT_LT(m1.tail_bound, 1e-8);
}

TEST(Boundary, EmptyPointIsDeltaAtZero) {
  auto p = canon();
  auto fam = extreme_family(Config(), 3, kMin20, p, 1e-12);
  for (std::size_t k = 1; k <= 3; ++k) {
    EXPECT_EQ(fam.levels.at(k).atoms.size(), 1u);
    EXPECT_EQ(to_double(fam.levels.at(k).weight(Config())), 1.0);
  }
  EXPECT_EQ(coherence_check(fam, 1, kMin20, p), 0.0);
  auto r = boundary_moment_check(Config(), 2, Partition({1}), kMin20, p, 1e-12);
  EXPECT_LT(r.value, 1e-15);
}

TEST(Boundary, CoherenceSmall) {
  auto p = canon();
  auto fam = extreme_family(cfg("+:3,+:1,+:0"), 2, kMin28, p, 1e-12);
  EXPECT_LT(coherence_check(fam, 1, kMin28, p), 1e-7);
  auto mixed = extreme_family(cfg("-:1,+:0"), 2, kMin20, p, 1e-12);
  EXPECT_LT(coherence_check(mixed, 1, kMin20, p), 1e-5);
}

TEST(Boundary, CoherenceRefusesLumpedLevel) {
  auto p = canon();
  auto fam = extreme_family(cfg("+:1,+:0"), 3, kMin28, p, 1e-12);
  EXPECT_THROW(coherence_check(fam, 2, kMin28, p), std::domain_error);
}

TEST(Boundary, CoherenceDetectsPerturbation) {
  auto p = canon();
  auto fam = extreme_family(cfg("+:2,+:1,+:0"), 2, kMin28, p, 1e-12);
  double base = coherence_check(fam, 1, kMin28, p);
  auto& atoms = fam.levels.at(1).atoms;
  const double eps = 1e-4;
  atoms.at(cfg("+:1")) += Real(eps);
  EXPECT_GE(coherence_check(fam, 1, kMin28, p), eps - base);
}

TEST(Boundary, MomentExamples) {
  auto p = canon();
  auto r0 = boundary_moment_check(cfg("+:0"), 1, Partition(), kMin28, p, 1e-12);
  EXPECT_LT(r0.value, 1e-8);
  auto r1 = boundary_moment_check(cfg("+:0"), 1, Partition({1}), kMin28, p, 1e-12);
  EXPECT_LT(r1.value, 1e-8);
  auto r2 = boundary_moment_check(cfg("+:0"), 1, Partition({2}), kMin28, p, 1e-12);
  EXPECT_LT(r2.value, 1e-8);
  auto r3 = boundary_moment_check(cfg("-:0,+:2,+:1"), 2, Partition({2, 1}), kMin28, p, 1e-12);
  EXPECT_LT(r3.value, 1e-7);
}

TEST(Boundary, RegularLimit) {
  auto p = canon();
  auto y = cfg("+:0");
  auto zero_padded = [](long n) { return ExtConfig(Config(std::vector<LatticePoint>{LatticePoint::plus(0)}), n - 1); };
  auto lim = regular_limit(zero_padded, cfg("+:0"), Rational(1, 2), 2, y, p, 1e-12);
  EXPECT_NEAR(to_double(lim.value), 0.2887880950866024, 1e-10);
  // Shrinking points instead of zeros give the same limit.
  auto shrinking = [](long n) {
    std::vector<LatticePoint> pts{LatticePoint::plus(0)};
    for (long i = 1; i < n; ++i) pts.push_back(LatticePoint::plus(2 * n + i));
    return ExtConfig(Config(pts));
  };
  auto lim2 = regular_limit(shrinking, cfg("+:0"), Rational(1, 2), 2, y, p, 1e-12);
  EXPECT_NEAR(to_double(lim2.value), to_double(lim.value), 1e-10);
  auto outside = regular_limit(zero_padded, cfg("+:0"), Rational(1, 2), 2, cfg("+:-1"), p, 1e-12);
  EXPECT_EQ(to_double(outside.value), 0.0);
  // A sequence that moves outside (-eps, eps) is rejected.
  auto wandering = [](long n) {
    return ExtConfig(Config(std::vector<LatticePoint>{LatticePoint::plus(0), LatticePoint::plus(n % 2)}), n - 2);
  };
  EXPECT_THROW(regular_limit(wandering, cfg("+:0"), Rational(1, 4), 3, y, p, 1e-12), std::invalid_argument);
}

TEST(Boundary, TightnessWitness) {
  auto p = canon();
  auto bound = extreme_mass_bound(p.q(), 1e-12);
  for (const char* x : {"+:0", "-:1,+:0", "+:3,+:1,+:0", "-:0,-:2,+:1"}) {
    auto fam = extreme_family(cfg(x), 1, kMin20, p, 1e-12);
    auto c = cfg(x);
    LatticePoint x0 = abs(value(c[0], p)) > abs(value(c[c.size() - 1], p)) ? c[0] : c[c.size() - 1];
    EXPECT_GT(to_double(fam.levels.at(1).weight(Config(std::vector<LatticePoint>{x0}))), to_double(bound.value)) << x;
  }
}

TEST(Boundary, DistinctPointsGiveDistinctFamilies) {
  auto p = canon();
  auto a = extreme_family(cfg("+:1,+:0"), 1, kMin20, p, 1e-12).levels.at(1);
  auto b = extreme_family(cfg("+:2,+:0"), 1, kMin20, p, 1e-12).levels.at(1);
  double diff = 0;
  for (auto& [c, w] : a.atoms) diff = std::max(diff, magnitude(Real(w - b.weight(c))));
  EXPECT_GT(diff, 1e-3);
}
