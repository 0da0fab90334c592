#pragma once

// q-arithmetic: Pochhammer symbols, q-integers, the q-derivative and the
// q-integral on the lattice, divided differences and Vandermonde products.

#include "qgt/lattice.hpp"
#include "qgt/numeric.hpp"

#include <algorithm>
#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace qgt {

/// Raised when a limit or truncated series fails to settle within tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Pochhammer symbols

/// (a;q)_n = prod_{i<n} (1 - a q^i), exactly.
template <class T>
T q_pochhammer(const T& a, const Rational& q, long n) {
  T result = lift<T>(Rational(1));
  T factor = a;
  const T qq = lift<T>(q);
  for (long i = 0; i < n; ++i) {
    result *= lift<T>(Rational(1)) - factor;
    factor *= qq;
  }
  return result;
}

/// A truncated infinite product together with a certified bound on
/// |value - exact|.
template <class T>
struct TruncatedValue {
  T value;
  double error_bound = 0.0;
  long terms = 0;
};

/// (a;q)_inf with |error| <= tol.  After T factors the log of the remainder
/// is bounded by sum_{i>=T} |a|q^i/(1-|a|q^i) <= |a|q^T/((1-q)(1-|a|q^T)).
TruncatedValue<Real> q_pochhammer_inf(const Real& a, const Rational& q, double tol);
TruncatedValue<std::complex<double>> q_pochhammer_inf(std::complex<double> a, double q, double tol);

/// [n]_q = (1 - q^n)/(1 - q).
Rational q_number(long n, const Rational& q);
/// [m]_q! as the product [1]_q ... [m]_q.
Rational q_factorial(long m, const Rational& q);
/// [m]_q! through (q;q)_m / (1-q)^m.
Rational q_factorial_pochhammer(long m, const Rational& q);

// ---------------------------------------------------------------------------
// Functions on the closed lattice

/// A function on the closed lattice, evaluated at exact lattice values (0
/// included).  Membership in the classes C^n is the caller's responsibility.
template <class T>
using GridFunction = std::function<T(const Rational&)>;

/// D_q^order f(t) for t != 0, from the values f(t q^k), k = 0..order.
template <class T>
T q_derivative(const GridFunction<T>& f, const Rational& t, int order, const Rational& q) {
  if (order < 0) throw std::invalid_argument("derivative order must be nonnegative");
  if (t == 0) throw std::invalid_argument("q-derivative at 0 is a limit; use q_derivative_at_zero");
  std::vector<T> g;
  std::vector<Rational> pts;
  g.reserve(order + 1);
  Rational tk = t;
  for (int k = 0; k <= order; ++k) {
    g.push_back(f(tk));
    pts.push_back(tk);
    tk *= q;
  }
  const Rational one_minus_q = Rational(1) - q;
  for (int level = 0; level < order; ++level) {
    for (std::size_t k = 0; k + 1 < g.size(); ++k)
      g[k] = (g[k] - g[k + 1]) / lift<T>(pts[k] * one_minus_q);
    g.pop_back();
  }
  return g.front();
}

/// lim_{t->0} D_q^order f(t), probed along t = zeta_+ q^n.  Declared converged
/// once three successive probes differ by less than tol.
template <class T>
T q_derivative_at_zero(const GridFunction<T>& f, int order, const QParams& params, double tol,
                       long max_probes = 400) {
  if (order == 0) return f(Rational(0));
  std::vector<T> probes;
  for (long n = 0; n < max_probes; ++n) {
    Rational t = value(LatticePoint::plus(n), params);
    probes.push_back(q_derivative(f, t, order, params.q()));
    const auto s = probes.size();
    if (s >= 3 && magnitude(probes[s - 1] - probes[s - 2]) < tol &&
        magnitude(probes[s - 2] - probes[s - 3]) < tol)
      return probes.back();
  }
  throw ConvergenceError("q-derivative at 0 did not converge");
}

/// A q-integral value plus an estimate of the truncated part near 0.
template <class T>
struct QIntegral {
  T value;
  double tail_estimate = 0.0;
};

/// int_a^b f d_qt = <f, mu restricted to I(a,b)> with weights (1-q)|t|.  An
/// endpoint given as std::nullopt means 0.  Points with |t| < min_abs are cut
/// off; the tail estimate is (1-q) sum_{|t|<min_abs} |t| times the largest
/// |f| seen on the 8 innermost retained points.  If |f(t) t| grows toward 0
/// the integral is reported as divergent.
template <class T>
QIntegral<T> q_integral(const GridFunction<T>& f, const std::optional<LatticePoint>& a,
                        const std::optional<LatticePoint>& b, const QParams& params,
                        const Rational& min_abs);

/// f[x_1, ..., x_N] for pairwise distinct knots.
template <class T>
T divided_difference(const GridFunction<T>& f, std::span<const Rational> knots) {
  const std::size_t n = knots.size();
  if (n == 0) throw std::invalid_argument("divided difference needs at least one knot");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (knots[i] == knots[j]) throw std::invalid_argument("divided difference needs distinct knots");
  std::vector<T> table;
  table.reserve(n);
  for (const auto& x : knots) table.push_back(f(x));
  // After pass `len`, table[i] = f[x_i, ..., x_{i+len}].
  for (std::size_t len = 1; len < n; ++len)
    for (std::size_t i = 0; i + len < n; ++i)
      table[i] = (table[i + 1] - table[i]) / lift<T>(knots[i + len] - knots[i]);
  return table.front();
}

/// V(a_1..a_M) = prod_{i<j} (a_i - a_j).
template <class T>
T vandermonde(std::span<const T> a) {
  T v(1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) v *= a[i] - a[j];
  return v;
}

Rational vandermonde(const Config& c, const QParams& params);
/// |A| = |a_1| ... |a_M|.
Rational abs_prod(const Config& c, const QParams& params);

// ---------------------------------------------------------------------------

template <class T>
QIntegral<T> q_integral(const GridFunction<T>& f, const std::optional<LatticePoint>& a,
                        const std::optional<LatticePoint>& b, const QParams& params,
                        const Rational& min_abs) {
  // std::nullopt stands for 0, which sits between the rays.
  auto less = [](const std::optional<LatticePoint>& x, const std::optional<LatticePoint>& y) {
    if (x && y) return *x < *y;
    if (!x && !y) return false;
    if (!x) return y->positive();
    return !x->positive();
  };
  if (!less(a, b) && !less(b, a)) return {lift<T>(Rational(0)), 0.0};
  if (less(b, a)) {
    auto r = q_integral(f, b, a, params, min_abs);
    r.value = lift<T>(Rational(0)) - r.value;
    return r;
  }

  const Rational one_minus_q = Rational(1) - params.q();
  T sum = lift<T>(Rational(0));
  double tail = 0.0;
  auto add_point = [&](const LatticePoint& p) {
    Rational t = value(p, params);
    sum += f(t) * lift<T>(one_minus_q * abs(t));
  };

  // Sums one ray from `outer` toward 0 and bounds what is cut off.
  auto sweep_to_zero = [&](const LatticePoint& outer, bool include_outer) {
    if (!(min_abs > 0)) throw std::invalid_argument("an interval reaching 0 needs min_abs > 0");
    auto pts = ray_points_down_to(outer, min_abs, params);
    std::vector<double> inner_f;
    std::vector<double> inner_tf;
    for (std::size_t i = include_outer ? 0 : 1; i < pts.size(); ++i) {
      add_point(pts[i]);
      Rational t = value(pts[i], params);
      double fv = magnitude(f(t));
      inner_f.push_back(fv);
      inner_tf.push_back(fv * magnitude(t));
    }
    const std::size_t window = std::min<std::size_t>(8, inner_f.size());
    double sup = 0.0;
    for (std::size_t i = inner_f.size() - window; i < inner_f.size(); ++i) sup = std::max(sup, inner_f[i]);
    if (inner_tf.size() >= 4 && inner_tf.back() > inner_tf[inner_tf.size() - 4])
      throw ConvergenceError("q-integral diverges: |f(t) t| does not decay toward 0");
    Rational below = small_point_mass(outer.sign, min_abs, outer, params);
    tail += to_double(one_minus_q * below) * sup;
  };

  if (!a) {  // int_0^b, b > 0: (0, b]
    sweep_to_zero(*b, true);
  } else if (!b) {  // int_a^0, a < 0: [a, 0)
    sweep_to_zero(*a, true);
  } else if (!a->positive() && b->positive()) {
    sweep_to_zero(*a, true);
    sweep_to_zero(*b, true);
  } else {
    for (const auto& p : enumerate_interval(*a, *b, Rational(0), params)) add_point(p);
  }
  return {sum, tail};
}

}  // namespace qgt
