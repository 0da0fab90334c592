#include "oracle.hpp"
#include "qgt/kernels.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qgt;
using oracle::canon;
using oracle::cfg;

namespace {

// Composition of brute-force link weights over all interlacing chains.
std::map<Config, Rational> brute_telescope(const Config& x, std::size_t k, const QParams& p) {
  std::map<Config, Rational> cur{{x, Rational(1)}};
  while (cur.begin()->first.size() > k) {
    std::map<Config, Rational> next;
    for (auto& [c, w] : cur) {
      std::vector<Config> kids;
      oracle::all_children(c, kids);
      for (auto& y : kids) {
        Rational lw = oracle::link(c, y, p);
        if (lw != 0) next[y] += w * lw;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Config random_single_sign(std::mt19937& gen, std::size_t n, Sign s, long spread = 7) {
  std::vector<LatticePoint> pts;
  while (pts.size() < n) {
    LatticePoint p{s, static_cast<long>(gen() % spread) - 1};
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return Config(pts);
}

}  // namespace

TEST(Kernels, LinkWeightExamples) {
  auto p = canon();
  EXPECT_EQ(link_weight(cfg("+:2,+:0"), cfg("+:1"), p), Rational(1, 3));
  EXPECT_EQ(link_weight(cfg("+:2,+:0"), cfg("+:0"), p), Rational(2, 3));
  EXPECT_EQ(link_weight(cfg("+:2,+:0"), cfg("+:2"), p), Rational(0));
  auto x = cfg("-:0,-:3,+:2,+:0");
  auto y = cfg("-:1,+:5,+:1");
  EXPECT_EQ(link_weight(x, y, p), oracle::link(x, y, p));
}

TEST(Kernels, LinkMeasureExamples) {
  auto p = canon();
  auto mu = link_measure(cfg("+:2,+:0"), Rational(0), p);
  EXPECT_EQ(mu.atoms.size(), 2u);
  EXPECT_EQ(mu.weight(cfg("+:1")), Rational(1, 3));
  EXPECT_EQ(mu.weight(cfg("+:0")), Rational(2, 3));
  EXPECT_EQ(mu.tail_bound, 0.0);
  auto single = link_measure(cfg("+:1,+:0"), Rational(0), p);
  EXPECT_EQ(single.atoms.size(), 1u);
  EXPECT_EQ(single.weight(cfg("+:0")), Rational(1));

  auto mixed = link_measure(cfg("-:0,+:0"), Rational(1, 1024), p);
  Rational total = mixed.total();
  EXPECT_LE(total, Rational(1));
  EXPECT_GE(total, Rational(1) - Rational(1, 512));
  EXPECT_GE(to_double(total) + mixed.tail_bound, 1.0 - 1e-15);
  EXPECT_LE(mixed.tail_bound, 1.0 / 512);
}

TEST(Kernels, StochasticOnRandomConfigs) {
  auto p = QParams(Rational(1, 3), Rational(2), Rational(-3, 2));
  std::mt19937 gen(3);
  for (int t = 0; t < 40; ++t) {
    auto x = random_single_sign(gen, 2 + gen() % 4, gen() % 2 ? Sign::Plus : Sign::Minus);
    EXPECT_EQ(link_measure(x, Rational(0), p).total(), Rational(1));
  }
}

TEST(Kernels, TelescopeMatchesBruteForce) {
  auto p = canon();
  std::mt19937 gen(17);
  for (int t = 0; t < 15; ++t) {
    std::size_t n = 2 + gen() % 4;
    auto x = random_single_sign(gen, n, gen() % 2 ? Sign::Plus : Sign::Minus);
    std::size_t k = 1 + gen() % (n - 1);
    auto mu = telescope<Rational>(x, k, Rational(0), p);
    auto ref = brute_telescope(x, k, p);
    EXPECT_EQ(mu.atoms, ref);
    for (auto& [y, w] : mu.atoms) {
      EXPECT_LE(x[0], y[0]);
      EXPECT_LE(y[y.size() - 1], x[x.size() - 1]);
    }
  }
}

TEST(Kernels, TelescopeSingleStepIsLink) {
  auto p = canon();
  auto x = cfg("+:4,+:2,+:1,+:0");
  EXPECT_EQ(telescope<Rational>(x, 3, Rational(0), p).atoms, link_measure(x, Rational(0), p).atoms);
}

TEST(Kernels, ClosedN1) {
  auto p = canon();
  ExtConfig x(cfg("+:2,+:0"));
  EXPECT_EQ(lambda_closed_n1(x, LatticePoint::plus(0), p), Rational(2, 3));
  EXPECT_EQ(lambda_closed_n1(x, LatticePoint::plus(1), p), Rational(1, 3));
  EXPECT_EQ(lambda_closed_n1(x, LatticePoint::plus(3), p), Rational(0));
  EXPECT_EQ(lambda_closed_n1(x, LatticePoint::plus(-1), p), Rational(0));
  EXPECT_EQ(lambda_closed_n1(x, LatticePoint::minus(1), p), Rational(0));
  auto x3 = cfg("+:3,+:2,+:0");
  auto ref = brute_telescope(x3, 1, p);
  for (long e = -1; e <= 5; ++e) {
    Config y(std::vector<LatticePoint>{LatticePoint::plus(e)});
    Rational expect = ref.count(y) ? ref[y] : Rational(0);
    EXPECT_EQ(lambda_closed_n1(ExtConfig(x3), LatticePoint::plus(e), p), expect);
  }
}

TEST(Kernels, ClosedNKMatchesBruteForce) {
  auto p = QParams(Rational(2, 5), Rational(1), Rational(-1));
  std::mt19937 gen(23);
  for (int t = 0; t < 12; ++t) {
    std::size_t n = 2 + gen() % 4;
    auto x = random_single_sign(gen, n, gen() % 2 ? Sign::Plus : Sign::Minus, 6);
    std::size_t k = 1 + gen() % (n - 1);
    for (auto& [y, w] : brute_telescope(x, k, p)) EXPECT_EQ(lambda_closed_nk(ExtConfig(x), y, p), w);
  }
  // A Y outside the support has weight 0.
  EXPECT_EQ(lambda_closed_nk(ExtConfig(cfg("+:3,+:2,+:0")), cfg("+:5,+:4"), p), Rational(0));
}

TEST(Kernels, LambdaInfSingleAtom) {
  auto p = canon();
  auto x = cfg("+:0");
  auto at0 = lambda_inf(x, cfg("+:0"), p, 1e-12);
  EXPECT_NEAR(to_double(at0.value), 0.2887880950866024, 1e-10);
  double total = 0;
  for (long n = 0; n < 60; ++n) {
    // q^n (q^{n+1}; q)_inf
    double expect = std::ldexp(1.0, static_cast<int>(-n));
    for (long i = n + 1; i < 200; ++i) expect *= 1 - std::ldexp(1.0, static_cast<int>(-i));
    auto r = lambda_inf_residue(x, Config(std::vector<LatticePoint>{LatticePoint::plus(n)}), p, 1e-14);
    EXPECT_NEAR(to_double(r.value), expect, 1e-13);
    total += to_double(r.value);
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_EQ(to_double(lambda_inf_residue(x, cfg("-:0"), p, 1e-12).value), 0.0);
}

TEST(Kernels, LambdaInfLimitAgreesWithResidue) {
  auto p = canon();
  auto x = cfg("-:1,+:2,+:0");
  for (const char* y : {"+:1", "-:2", "-:1,+:1", "-:3,+:4"}) {
    auto lim = lambda_inf(x, cfg(y), p, 1e-11);
    auto res = lambda_inf_residue(x, cfg(y), p, 1e-13);
    EXPECT_NEAR(to_double(lim.value), to_double(res.value), 1e-9) << y;
    ASSERT_GE(lim.increments.size(), 2u);
  }
}

TEST(Kernels, EvalFunctions) {
  auto p = canon();
  EvalPoints z{CxRational(Rational(0), Rational(2))};
  auto y = cfg("+:0");
  CxRational expect = (CxRational(1) - CxRational(1) / z[0]) * (CxRational(1) - CxRational(Rational(1, 2)) / z[0]);
  EXPECT_EQ(eval_f_z(z, y, 2, p), expect.inverse());
  EXPECT_EQ(eval_f_az(Config(), z, y, 2, p), eval_f_z(z, y, 2, p));
  // m = K is the delta function at A.
  auto a = cfg("+:2,+:0");
  EXPECT_EQ(eval_f_az(a, EvalPoints{}, a, 4, p), CxRational(1));
  EXPECT_EQ(eval_f_az(a, EvalPoints{}, cfg("+:1,+:0"), 4, p), CxRational(0));
  // f_{A|Z} vanishes unless A is inside Y.
  EXPECT_EQ(eval_f_az(cfg("+:3"), z, cfg("+:1,+:0"), 4, p), CxRational(0));
  EXPECT_THROW(check_eval_points({CxRational(1)}), std::invalid_argument);
  EXPECT_THROW(check_eval_points({CxRational(0, 1), CxRational(0, 1)}), std::invalid_argument);
}

TEST(Kernels, ProductFormulaOnePoint) {
  auto p = canon();
  EvalPoints z{CxRational(Rational(0), Rational(2))};
  auto r = verify_f_z_image(cfg("+:2,+:0"), z, Rational(0), p);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.value, 0.0);
  // The right side is prod (1 - x/z)^{-1}.
  CxRational rhs(1);
  for (Rational xv : {Rational(1, 4), Rational(1)}) rhs *= (CxRational(1) - CxRational(xv) / z[0]).inverse();
  EXPECT_EQ(image_f_az(ExtConfig(cfg("+:2,+:0")), Config(), z, 1, p), rhs);
}

TEST(Kernels, ProductFormulaSeveralK) {
  auto p = canon();
  EvalPoints z{CxRational(Rational(1, 3), Rational(2)), CxRational(Rational(-1), Rational(-1, 2)),
               CxRational(Rational(0), Rational(5))};
  auto x = cfg("+:4,+:3,+:1,+:0");
  for (std::size_t k = 1; k <= 3; ++k) {
    EvalPoints zk(z.begin(), z.begin() + static_cast<long>(k));
    auto r = verify_f_z_image(x, zk, Rational(0), p);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.value, 0.0) << k;
  }
  auto mixed = verify_f_z_image(cfg("-:0,+:1,+:0"), EvalPoints(z.begin(), z.begin() + 2), Rational(1, 1 << 20), p);
  EXPECT_LE(mixed.value, mixed.tail_bound + 1e-12);
  EXPECT_LT(mixed.value, 1e-5);
}

TEST(Kernels, FixedPointImageConsistency) {
  auto p = canon();
  auto x = cfg("+:4,+:2,+:1,+:0");
  EvalPoints z{CxRational(Rational(1, 2), Rational(3))};
  // m = 1, n = 1 exact against the telescope.
  auto r = verify_f_az_image(x, cfg("+:1"), z, Rational(0), p);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.value, 0.0);
  auto r2 = verify_f_az_image(x, cfg("+:2"), EvalPoints{z[0], CxRational(Rational(-1), Rational(1))}, Rational(0), p);
  EXPECT_EQ(r2.value, 0.0);
  // m = K reduces to the kernel itself.
  EXPECT_EQ(image_f_az(ExtConfig(x), cfg("+:2,+:1"), EvalPoints{}, 2, p),
            CxRational(lambda_closed_nk(ExtConfig(x), cfg("+:2,+:1"), p)));
  // m = 0 is the plain product formula.
  EXPECT_EQ(verify_f_az_image(x, Config(), z, Rational(0), p).value, verify_f_z_image(x, z, Rational(0), p).value);
}

TEST(Kernels, MomentCheck) {
  auto p = canon();
  auto r0 = moment_check(ExtConfig(cfg("+:3,+:2,+:0")), 2, Partition({1}), Rational(0), p);
  EXPECT_TRUE(r0.exact);
  EXPECT_EQ(r0.value, 0.0);
  auto r1 = moment_check(ExtConfig(cfg("-:0,+:0")), 1, Partition({2}), Rational(1, 1 << 20), p);
  EXPECT_LT(r1.value, std::ldexp(1.0, -15));
  auto empty = moment_check(ExtConfig(cfg("-:0,+:0")), 1, Partition(), Rational(1, 1 << 20), p);
  EXPECT_LE(empty.value, empty.tail_bound + 1e-15);
  auto ext = moment_check(ExtConfig(cfg("+:2,+:0"), 2), 2, Partition({2, 1}), Rational(1, 1 << 20), p);
  EXPECT_LE(ext.value, ext.tail_bound + 1e-15);
  EXPECT_LT(ext.value, 1e-5);
}

TEST(Kernels, ExtendedKernelAndExtremeMass) {
  auto p = canon();
  auto bound = extreme_mass_bound(p.q(), 1e-12);
  EXPECT_NEAR(to_double(bound.value), 0.0302810, 1e-6);
  auto mu = extended_kernel(ExtConfig(cfg("+:2,+:0"), 1), 1, Rational(1, 1 << 16), p);
  EXPECT_LE(mu.total(), Rational(1));
  for (const char* x : {"+:3,+:0", "-:0,+:2,+:1", "-:4,-:2,+:0"})
    EXPECT_GE(to_double(extreme_point_mass(ExtConfig(cfg(x), 2), p)), to_double(bound.value));
}

TEST(Kernels, OrthogonalityResidue) {
  auto p = canon();
  for (long n = 2; n <= 5; ++n)
    for (long e1 = -2; e1 <= 3; ++e1)
      for (long e2 = -2; e2 <= 3; ++e2)
        for (auto s1 : {Sign::Plus, Sign::Minus})
          for (auto s2 : {Sign::Plus, Sign::Minus}) {
            LatticePoint u{s1, e1}, y{s2, e2};
            Rational expect = u == y ? 1 : 0;
            EXPECT_EQ(orthogonality_residue(u, y, n, p, Closure::Right), expect);
            EXPECT_EQ(orthogonality_residue(u, y, n, p, Closure::Left), expect);
          }
}
