#include "qgt/transforms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qgt {

namespace {

using cd = std::complex<double>;

cd poch(cd a, double q, long n, double tol) {
  if (n == kInfiniteLevel) return q_pochhammer_inf(a, q, tol).value;
  cd r(1.0, 0.0);
  for (long i = 0; i < n; ++i) {
    r *= 1.0 - a;
    a *= q;
  }
  return r;
}

double atom_value(const Config& c, const QParams& params) {
  return c.empty() ? 0.0 : to_double(value(c[0], params));
}

}  // namespace

CxRational qlaplace(const DiscreteMeasure<Rational>& m, const CxRational& z, long n, const QParams& params) {
  if (n < 0) throw std::invalid_argument("exact transform needs a finite level");
  if (z.im == 0) throw std::invalid_argument("z must lie off the real axis");
  const CxRational zinv = z.inverse();
  CxRational sum;
  for (const auto& [c, w] : m.atoms) {
    Rational y = c.empty() ? Rational(0) : value(c[0], params);
    sum += CxRational(w) / q_pochhammer<CxRational>(CxRational(y) * zinv, params.q(), n);
  }
  return sum;
}

std::complex<double> qlaplace_numeric(const DiscreteMeasure<Rational>& m, std::complex<double> z, long n,
                                      const QParams& params, double tol) {
  // Real z is fine here as long as it avoids the poles; contours cross the axis.
  if (z == cd(0.0, 0.0)) throw std::invalid_argument("z must be nonzero");
  const double q = to_double(params.q());
  cd sum(0.0, 0.0);
  for (const auto& [c, w] : m.atoms) {
    cd d = poch(atom_value(c, params) / z, q, n, tol / 10);
    if (d == cd(0.0, 0.0)) throw std::domain_error("z is a pole of the transform");
    sum += to_double(w) / d;
  }
  return sum;
}

Contour default_contour(const LatticePoint& y, const QParams& params) {
  const double yv = to_double(value(y, params));
  const double q = to_double(params.q());
  Contour c;
  c.abscissa = (yv > 0 ? 1.0 : -1.0) * std::sqrt(std::fabs(yv) * std::fabs(yv * q));
  c.half_height = 10 * std::fabs(yv);
  c.step = 0.25;
  return c;
}

InverseResult inv_qlaplace(const ComplexFn& phi, const LatticePoint& y, long n, const QParams& params, double tol,
                           std::optional<Contour> contour) {
  if (n != kInfiniteLevel && n < 2) throw std::invalid_argument("inverse transform needs N >= 2");
  const double yv = to_double(value(y, params));
  const double q = to_double(params.q());
  Contour c = contour ? *contour : default_contour(y, params);
  {
    double lo = std::min(yv, yv * q), hi = std::max(yv, yv * q);
    if (!(c.abscissa > lo && c.abscissa < hi)) throw std::invalid_argument("abscissa must separate y and yq");
  }
  const double a = c.abscissa;
  const double prefactor = std::fabs(yv) * (n == kInfiniteLevel ? 1.0 : 1.0 - std::pow(q, n - 1));
  const long kernel_len = n == kInfiniteLevel ? kInfiniteLevel : n - 2;
  auto g = [&](double t) {
    cd z(a, t);
    return poch(yv * q / z, q, kernel_len, tol / 10) * phi(z) / (z * z);
  };

  // Grow R until the |z|^-2 tail beyond it is negligible.
  double r = c.half_height;
  double tail = 0.0;
  double previous_tail = INFINITY;
  for (int iter = 0;; ++iter) {
    double cr = std::max(std::abs(g(r)), std::abs(g(-r))) * (a * a + r * r);
    tail = prefactor * cr * 2 / r / (2 * std::numbers::pi);
    if (tail < tol / 10) break;
    if (iter > 60 || (iter > 8 && tail > previous_tail))
      throw ConvergenceError("inverse transform: integrand does not decay like |z|^-2");
    previous_tail = tail;
    r *= 2;
  }

  // t = scale sinh(s) on |s| <= smax, smax a multiple of the first step so
  // that halving only adds midpoints.
  const double scale = std::fabs(a);
  double h = c.step;
  const long base_count = static_cast<long>(std::ceil(std::asinh(r / scale) / h));
  auto sum_on = [&](double step, long count, long start, long stride) {
    cd s(0.0, 0.0);
    for (long k = start; k <= count; k += stride) {
      double sv = k * step;
      double jac = scale * std::cosh(sv);
      cd v = k == 0 ? g(0.0) : g(scale * std::sinh(sv)) + g(-scale * std::sinh(sv));
      s += v * jac;
    }
    return s;
  };
  long count = base_count;
  cd raw = sum_on(h, count, 0, 1) * h;
  double diff = INFINITY;
  for (int iter = 0; iter < 14; ++iter) {
    double h2 = h / 2;
    count *= 2;
    cd refined = raw / 2.0 + sum_on(h2, count, 1, 2) * h2;
    diff = std::abs(refined - raw) * prefactor / (2 * std::numbers::pi);
    raw = refined;
    h = h2;
    if (diff < tol / 10) break;
  }
  if (!(diff < tol / 10)) throw ConvergenceError("inverse transform: quadrature did not settle");
  // (1/2 pi i) int_{top -> bottom} g dz with dz = i dt gives -(1/2 pi) int g dt.
  cd value = -raw * prefactor / (2 * std::numbers::pi);
  return {value, diff + tail, r, h};
}

}  // namespace qgt
