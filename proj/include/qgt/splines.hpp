#pragma once

// q-B-splines, their moments, the q-Hermite-Genocchi formula and the
// extension of Vandermonde ratios to configurations with zeros.

#include "qgt/kernels.hpp"
#include "qgt/lattice.hpp"
#include "qgt/qcalc.hpp"

#include <vector>

namespace qgt {

/// B^q_N(X) = Lambda^N_1(X, .) as a measure on the closed lattice.  Keys are
/// one-point configurations; the empty key is the atom at 0, which only
/// appears when X has zeros and is computed as the mass deficit.
DiscreteMeasure<Rational> qbspline(const ExtConfig& x, const Rational& min_abs, const QParams& params);

/// [m]_q! [N-1]_q! / [m+N-1]_q! * h_m(X).
Rational qbspline_moment(const ExtConfig& x, int m, const QParams& params);

/// <t^m, mu> over the atoms of a level-one measure.
Rational measure_moment(const DiscreteMeasure<Rational>& mu, int m, const QParams& params);

/// f[x_1..x_N] through <D_q^{N-1} f, B^q_N(X)> / [N-1]_q!.  D_q^{N-1} f is
/// evaluated only at the atoms of the spline; at the atom 0 it is the limit
/// along the positive ray.
template <class T>
QIntegral<T> hermite_genocchi(const GridFunction<T>& f, const ExtConfig& x, const Rational& min_abs,
                              const QParams& params, double tol);

enum class RatioFormula {
  Auto,                // direct ratio on distinct values, divided differences otherwise
  Direct,              // det[f_j(x_i)] / V(x)
  DividedDifferences,  // (-1)^{n(n-1)/2} det[f_j[x_1..x_l]]
  PlainFactorials,     // the same determinant with <D^{l-1} f_j, B_l> / (l-1)!
};

/// F(X) = det[f_j(x_i)] / V(X), continued to configurations with repeated
/// zeros.  Coordinates are taken as the nonzero points in increasing order
/// followed by the zeros.
template <class T>
QIntegral<T> vandermonde_ratio(const std::vector<GridFunction<T>>& fs, const ExtConfig& x, const Rational& min_abs,
                               const QParams& params, double tol, RatioFormula formula = RatioFormula::Auto);

// ---------------------------------------------------------------------------

template <class T>
QIntegral<T> hermite_genocchi(const GridFunction<T>& f, const ExtConfig& x, const Rational& min_abs,
                              const QParams& params, double tol) {
  const long n = static_cast<long>(x.level());
  if (n < 1) throw std::invalid_argument("Hermite-Genocchi needs N >= 1");
  auto spline = qbspline(x, min_abs, params);
  T sum = lift<T>(Rational(0));
  double sup = 0.0;
  for (const auto& [c, w] : spline.atoms) {
    T d;
    if (c.empty()) {
      d = q_derivative_at_zero(f, static_cast<int>(n - 1), params, tol);
    } else {
      d = q_derivative(f, value(c[0], params), static_cast<int>(n - 1), params.q());
    }
    sup = std::max(sup, magnitude(d));
    sum += d * lift<T>(w);
  }
  const Rational fact = q_factorial(n - 1, params.q());
  return {sum / lift<T>(fact), spline.tail_bound * sup / to_double(fact)};
}

template <class T>
QIntegral<T> vandermonde_ratio(const std::vector<GridFunction<T>>& fs, const ExtConfig& x, const Rational& min_abs,
                               const QParams& params, double tol, RatioFormula formula) {
  const std::size_t n = fs.size();
  if (n != x.level()) throw std::invalid_argument("need as many functions as coordinates");
  if (n == 0) return {lift<T>(Rational(1)), 0.0};
  const bool distinct = x.zero_mult <= 1;
  if (formula == RatioFormula::Auto) formula = distinct ? RatioFormula::Direct : RatioFormula::DividedDifferences;

  auto coords = values(x, params);
  if (formula == RatioFormula::Direct) {
    if (!distinct) throw std::domain_error("direct ratio needs distinct coordinates");
    Matrix<T> m(n, std::vector<T>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = fs[j](coords[i]);
    return {determinant(std::move(m)) / lift<T>(vandermonde<Rational>(coords)), 0.0};
  }

  Matrix<T> m(n, std::vector<T>(n));
  double tail = 0.0;
  for (std::size_t l = 1; l <= n; ++l) {
    // First l coordinates: nonzero points first, then zeros.
    std::size_t take = std::min(l, x.nonzero.size());
    std::vector<LatticePoint> head(x.nonzero.begin(), x.nonzero.begin() + static_cast<long>(take));
    ExtConfig sub(Config::from_sorted(std::move(head)), l - take);
    Rational scale(1);
    if (formula == RatioFormula::PlainFactorials) {
      Rational plain(1);
      for (std::size_t k = 2; k < l; ++k) plain *= Rational(static_cast<long>(k));
      scale = q_factorial(static_cast<long>(l) - 1, params.q()) / plain;
    }
    for (std::size_t j = 0; j < n; ++j) {
      auto hg = hermite_genocchi(fs[j], sub, min_abs, params, tol);
      m[l - 1][j] = hg.value * lift<T>(scale);
      tail += hg.tail_estimate * magnitude(scale);
    }
  }
  T det = determinant(std::move(m));
  if ((n * (n - 1) / 2) % 2 == 1) det = lift<T>(Rational(0)) - det;
  return {det, tail};
}

}  // namespace qgt
