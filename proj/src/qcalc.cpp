#include "qgt/qcalc.hpp"

#include <cmath>

namespace qgt {

namespace {

// Number of extra factors T so that |a| q^T / ((1-q)(1 - |a| q^T)) <= tol/2,
// counted from the first factor with |a| q^i < 1/2.
template <class Mag>
long tail_terms(Mag abs_a, double q, double tol) {
  long t = 0;
  double x = static_cast<double>(abs_a);
  while (x >= 0.5 || x / ((1.0 - q) * (1.0 - x)) > tol / 4) {
    x *= q;
    ++t;
    if (t > 100000) throw ConvergenceError("q-Pochhammer truncation does not settle");
  }
  return t;
}

}  // namespace

TruncatedValue<Real> q_pochhammer_inf(const Real& a, const Rational& q, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  const double qd = to_double(q);
  const double abs_a = std::fabs(to_double(a));
  long terms = tail_terms(abs_a, qd, tol);
  Real value(1);
  Real factor = a;
  const Real qq(q);
  for (long i = 0; i < terms; ++i) {
    value *= Real(1) - factor;
    factor *= qq;
  }
  // |log remainder| <= r implies |remainder - 1| <= e^r - 1 <= 2r for r <= 1.
  double r = std::fabs(to_double(factor)) / ((1.0 - qd) * (1.0 - std::fabs(to_double(factor))));
  double bound = std::fabs(to_double(value)) * std::expm1(r);
  return {value, bound, terms};
}

TruncatedValue<std::complex<double>> q_pochhammer_inf(std::complex<double> a, double q, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  long terms = tail_terms(std::abs(a), q, tol);
  std::complex<double> value(1.0, 0.0);
  std::complex<double> factor = a;
  for (long i = 0; i < terms; ++i) {
    value *= 1.0 - factor;
    factor *= q;
  }
  double x = std::abs(factor);
  double r = x / ((1.0 - q) * (1.0 - x));
  return {value, std::abs(value) * std::expm1(r) + 1e-15 * terms * std::abs(value), terms};
}

Rational q_number(long n, const Rational& q) {
  return (Rational(1) - pow_int(q, n)) / (Rational(1) - q);
}

Rational q_factorial(long m, const Rational& q) {
  if (m < 0) throw std::invalid_argument("q-factorial of a negative integer");
  Rational r(1);
  for (long k = 1; k <= m; ++k) r *= q_number(k, q);
  return r;
}

Rational q_factorial_pochhammer(long m, const Rational& q) {
  if (m < 0) throw std::invalid_argument("q-factorial of a negative integer");
  return q_pochhammer<Rational>(q, q, m) / pow_int(Rational(1) - q, m);
}

Rational vandermonde(const Config& c, const QParams& params) {
  auto v = values(c, params);
  return vandermonde<Rational>(std::span<const Rational>(v));
}

Rational abs_prod(const Config& c, const QParams& params) {
  Rational r(1);
  for (const auto& p : c) r *= abs(value(p, params));
  return r;
}

}  // namespace qgt
