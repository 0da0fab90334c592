#include "qgt/splines.hpp"

#include "qgt/symfunc.hpp"

#include <cmath>
#include <stdexcept>

namespace qgt {

namespace {

// Sum over the points x of X on one side of 0 of (|x| + m)^{N-2} / |den(x)|,
// where den(x) = x^zeros prod_{x' != x}(x - x').  Bounds |Lambda^N_1(X,y)|/|y|
// for |y| < m on that side.
double small_y_constant(const ExtConfig& x, bool positive_side, double m, const QParams& params) {
  const long n = static_cast<long>(x.level());
  auto xs = values(x.nonzero, params);
  double c = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if ((xs[i] > 0) != positive_side) continue;
    Rational den = pow_int(xs[i], static_cast<long>(x.zero_mult));
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != i) den *= xs[i] - xs[j];
    c += std::pow(std::fabs(to_double(xs[i])) + m, static_cast<double>(n - 2)) / std::fabs(to_double(den));
  }
  return c;
}

}  // namespace

DiscreteMeasure<Rational> qbspline(const ExtConfig& x, const Rational& min_abs, const QParams& params) {
  const std::size_t n = x.level();
  if (n < 1) throw std::invalid_argument("q-B-spline needs N >= 1");
  DiscreteMeasure<Rational> out;
  out.level = 1;
  if (x.nonzero.empty()) {
    out.atoms.emplace(Config(), Rational(1));
    return out;
  }
  if (n == 1) {
    out.atoms.emplace(x.nonzero, Rational(1));
    return out;
  }

  const Config& c = x.nonzero;
  const LatticePoint& lo = c[0];
  const LatticePoint& hi = c[c.size() - 1];
  std::vector<LatticePoint> window;
  bool truncated = false;
  if (x.zero_mult == 0 && !(c.has_negative() && c.has_positive())) {
    // The smallest segment containing X stays on one ray.
    window.push_back(lo);
    if (!(lo == hi)) {
      auto inner = enumerate_interval(lo, hi, Rational(0), params);
      for (const auto& p : inner)
        if (!(p == lo)) window.push_back(p);
    }
  } else {
    if (!(min_abs > 0)) throw std::invalid_argument("a spline charging 0 needs min_abs > 0");
    truncated = true;
    if (c.has_negative()) {
      auto neg = ray_points_down_to(lo, min_abs, params);
      window.insert(window.end(), neg.begin(), neg.end());
    }
    if (c.has_positive()) {
      auto pos = ray_points_down_to(hi, min_abs, params);
      window.insert(window.end(), pos.rbegin(), pos.rend());
    }
  }

  Rational total(0);
  for (const auto& y : window) {
    Rational w = lambda_closed_n1(x, y, params);
    if (w == 0) continue;
    total += w;
    out.atoms.emplace(Config::from_sorted({y}), std::move(w));
  }
  if (truncated) {
    const double m = to_double(min_abs);
    double tail = 0.0;
    if (c.has_negative())
      tail += small_y_constant(x, false, m, params) * to_double(small_point_mass(Sign::Minus, min_abs, lo, params));
    if (c.has_positive())
      tail += small_y_constant(x, true, m, params) * to_double(small_point_mass(Sign::Plus, min_abs, hi, params));
    out.tail_bound = tail;
  }
  if (x.zero_mult > 0) {
    Rational deficit = Rational(1) - total;
    if (to_double(deficit) < -out.tail_bound - 1e-15)
      throw std::logic_error("q-B-spline has negative mass at 0");
    if (deficit != 0) out.atoms.emplace(Config(), deficit);
  }
  return out;
}

Rational qbspline_moment(const ExtConfig& x, int m, const QParams& params) {
  const long n = static_cast<long>(x.level());
  const Rational& q = params.q();
  return q_factorial(m, q) * q_factorial(n - 1, q) / q_factorial(m + n - 1, q) * h_m(m, x, params);
}

Rational measure_moment(const DiscreteMeasure<Rational>& mu, int m, const QParams& params) {
  Rational s(0);
  for (const auto& [c, w] : mu.atoms) {
    if (c.empty()) {
      if (m == 0) s += w;
      continue;
    }
    s += w * pow_int(value(c[0], params), m);
  }
  return s;
}

}  // namespace qgt
