#include "oracle.hpp"
#include "qgt/qcalc.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace qgt;
using oracle::canon;

namespace {
GridFunction<Rational> monomial(int n) {
  return [n](const Rational& t) { return pow_int(t, n); };
}
}  // namespace

TEST(QCalc, PochhammerFinite) {
  EXPECT_EQ(q_pochhammer(Rational(7), Rational(1, 2), 0), Rational(1));
  EXPECT_EQ(q_pochhammer(Rational(1, 2), Rational(1, 2), 2), Rational(3, 8));
  Rational q(2, 5), a(-3, 7);
  for (long n = 0; n < 5; ++n)
    for (long m = 0; m < 5; ++m)
      EXPECT_EQ(q_pochhammer(a, q, n) * q_pochhammer(Rational(a * pow_int(q, n)), q, m), q_pochhammer(a, q, n + m));
}

TEST(QCalc, PochhammerInfinite) {
  auto r = q_pochhammer_inf(Real(Rational(1, 2)), Rational(1, 2), 1e-12);
  EXPECT_NEAR(to_double(r.value), 0.2887880950866024, 1e-12);
  EXPECT_LE(r.error_bound, 1e-12);
  auto c = q_pochhammer_inf(std::complex<double>(0.5, 0), 0.5, 1e-12);
  EXPECT_NEAR(c.value.real(), 0.2887880950866024, 1e-12);
  // Finite products approach the limit.
  double prev = 1.0;
  for (long n = 1; n < 30; ++n) {
    double err = std::fabs(to_double(q_pochhammer(Rational(1, 2), Rational(1, 2), n)) - 0.2887880950866024);
    EXPECT_LE(err, prev);
    prev = err;
  }
}

TEST(QCalc, QNumbersAndFactorials) {
  Rational q(1, 2);
  EXPECT_EQ(q_factorial(0, q), Rational(1));
  EXPECT_EQ(q_number(2, q), Rational(3, 2));
  EXPECT_EQ(q_factorial(3, q), Rational(21, 8));
  for (long m = 0; m < 9; ++m) EXPECT_EQ(q_factorial(m, q), q_factorial_pochhammer(m, q));
}

TEST(QCalc, Derivative) {
  Rational q(1, 2);
  EXPECT_EQ(q_derivative(monomial(2), Rational(1), 1, q), Rational(3, 2));
  EXPECT_EQ(q_derivative<Rational>([](const Rational&) { return Rational(5); }, Rational(1, 4), 1, q), Rational(0));
  for (int n = 1; n < 7; ++n) {
    Rational t(-3, 8);
    EXPECT_EQ(q_derivative(monomial(n), t, 1, q), q_number(n, q) * pow_int(t, n - 1));
  }
  EXPECT_THROW(q_derivative(monomial(2), Rational(0), 1, q), std::invalid_argument);
}

TEST(QCalc, DerivativeAtZero) {
  auto p = canon();
  EXPECT_EQ(q_derivative_at_zero(monomial(3), 3, p, 1e-12), Rational(21, 8));
  auto r = q_derivative_at_zero<Rational>([](const Rational& t) { return t * t + t; }, 1, p, 1e-12);
  EXPECT_LT(magnitude(Rational(r - 1)), 1e-10);
  GridFunction<Rational> wild = [](const Rational& t) { return t == 0 ? Rational(0) : Rational(1) / t; };
  EXPECT_THROW(q_derivative_at_zero(wild, 1, p, 1e-9, 60), ConvergenceError);
}

TEST(QCalc, Integral) {
  auto p = canon();
  auto P = LatticePoint::plus;
  GridFunction<Rational> one = [](const Rational&) { return Rational(1); };
  EXPECT_EQ(q_integral(one, P(1), P(0), p, Rational(0)).value, Rational(1, 2));
  EXPECT_EQ(q_integral(one, P(1), P(1), p, Rational(0)).value, Rational(0));
  EXPECT_EQ(q_integral(one, P(0), P(1), p, Rational(0)).value, Rational(-1, 2));
  // Newton-Leibniz for t^2.
  auto f = monomial(2);
  GridFunction<Rational> df = [&](const Rational& t) { return q_derivative(f, t, 1, p.q()); };
  EXPECT_EQ(q_integral(df, P(2), P(0), p, Rational(0)).value, Rational(15, 16));
  // Over [0, 1]: the sum of t (1-q) t = (1-q)/(1-q^2) = 2/3 minus a tail.
  auto r = q_integral(monomial(1), std::nullopt, P(0), p, Rational(1, 1 << 20));
  EXPECT_LE(std::fabs(to_double(r.value) - 2.0 / 3.0), r.tail_estimate + 1e-15);
  EXPECT_LT(r.tail_estimate, 1e-5);
  GridFunction<Rational> blowup = [](const Rational& t) { return Rational(1) / (t * t); };
  EXPECT_THROW(q_integral(blowup, std::nullopt, P(0), p, Rational(1, 1 << 20)), ConvergenceError);
}

TEST(QCalc, IntegrationByParts) {
  // int D f(t) g(t) = - int f(tq) D g(t) for g supported on {2^-k : 1 <= k <= 4}.
  auto p = canon();
  const Rational q = p.q();
  auto f = [](const Rational& t) { return t * t * t - 2 * t + 1; };
  auto g = [](const Rational& t) {
    for (int k = 1; k <= 4; ++k)
      if (t == pow_int(Rational(1, 2), k)) return Rational(k * k - 3);
    return Rational(0);
  };
  GridFunction<Rational> lhs = [&](const Rational& t) { return q_derivative<Rational>(f, t, 1, q) * g(t); };
  GridFunction<Rational> rhs = [&](const Rational& t) { return f(t * q) * q_derivative<Rational>(g, t, 1, q); };
  auto a = LatticePoint::plus(8), b = LatticePoint::plus(-2);
  EXPECT_EQ(q_integral(lhs, a, b, p, Rational(0)).value, -q_integral(rhs, a, b, p, Rational(0)).value);
}

TEST(QCalc, DividedDifferences) {
  std::vector<Rational> k2{Rational(1, 3), Rational(5, 2)};
  EXPECT_EQ(divided_difference(monomial(2), std::span<const Rational>(k2)), Rational(1, 3) + Rational(5, 2));
  std::vector<Rational> k3{Rational(1, 4), Rational(1, 2), Rational(1)};
  EXPECT_EQ(divided_difference(monomial(3), std::span<const Rational>(k3)), Rational(7, 4));
  EXPECT_EQ(divided_difference(monomial(1), std::span<const Rational>(k3)), Rational(0));
  std::vector<Rational> rep{Rational(1), Rational(1)};
  EXPECT_THROW(divided_difference(monomial(1), std::span<const Rational>(rep)), std::invalid_argument);
}

TEST(QCalc, DividedDifferencePermutationInvariant) {
  std::mt19937 gen(7);
  auto f = [](const Rational& t) { return pow_int(t, 5) - 3 * t * t + Rational(1, 7) * pow_int(t, 7); };
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + gen() % 5;
    std::vector<Rational> knots;
    while (knots.size() < n) {
      Rational v(static_cast<long>(gen() % 41) - 20, 1 + gen() % 7);
      if (std::find(knots.begin(), knots.end(), v) == knots.end()) knots.push_back(v);
    }
    Rational base = divided_difference<Rational>(f, knots);
    std::shuffle(knots.begin(), knots.end(), gen);
    EXPECT_EQ(divided_difference<Rational>(f, knots), base);
  }
}

TEST(QCalc, Vandermonde) {
  auto p = canon();
  EXPECT_EQ(vandermonde(oracle::cfg("+:3"), p), Rational(1));
  EXPECT_EQ(abs_prod(oracle::cfg("+:3"), p), Rational(1, 8));
  EXPECT_EQ(vandermonde(oracle::cfg("+:2,+:0"), p), Rational(-3, 4));
  EXPECT_EQ(abs_prod(oracle::cfg("-:0,+:1,+:0"), p), Rational(1, 2));
  auto c = oracle::cfg("-:0,-:3,+:2,+:1");
  auto v = vandermonde(c, p);
  EXPECT_EQ(abs(v), oracle::abs_vdm(oracle::vals(c, p)));
  EXPECT_GT(v, 0);  // sign (-1)^{M(M-1)/2} = +1 for M = 4
}
