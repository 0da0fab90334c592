#pragma once

// The q-Laplace transform on the lattice, truncated (level N) and full
// (N = infinity), and its inverse by quadrature along a vertical line.

#include "qgt/kernels.hpp"
#include "qgt/lattice.hpp"

#include <complex>
#include <functional>
#include <optional>

namespace qgt {

/// Level value standing for N = infinity.
inline constexpr long kInfiniteLevel = -1;

using ComplexFn = std::function<std::complex<double>(std::complex<double>)>;

/// sum_y M(y) / (y z^{-1}; q)_N, exactly.  The empty key is the point 0.
CxRational qlaplace(const DiscreteMeasure<Rational>& m, const CxRational& z, long n, const QParams& params);

/// The same in double precision; n may be kInfiniteLevel, in which case the
/// infinite products are truncated at tol/10.
std::complex<double> qlaplace_numeric(const DiscreteMeasure<Rational>& m, std::complex<double> z, long n,
                                      const QParams& params, double tol);

/// A vertical line Re z = abscissa, cut at |Im z| <= half_height, sampled
/// with trapezoid step `step` in the variable s where Im z = scale sinh(s).
struct Contour {
  double abscissa = 0.0;
  double half_height = 0.0;
  double step = 0.25;
};

/// Abscissa at sign(y) sqrt(|y| |yq|), half height 10 |y|.
Contour default_contour(const LatticePoint& y, const QParams& params);

struct InverseResult {
  std::complex<double> value;
  double error_estimate = 0.0;  // step halving difference plus tail estimate
  double half_height = 0.0;     // R actually used
  double step = 0.0;            // final step
};

/// M(y) recovered from phi by the inverse transform.  R grows until the tail
/// estimate C/R drops below tol/10 and the step halves until two successive
/// sums agree within tol/10.
InverseResult inv_qlaplace(const ComplexFn& phi, const LatticePoint& y, long n, const QParams& params, double tol,
                           std::optional<Contour> contour = std::nullopt);

}  // namespace qgt
