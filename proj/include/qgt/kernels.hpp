#pragma once

// Markov kernels of the extended Gelfand-Tsetlin graph on the two-sided
// q-lattice: link kernels, their compositions, closed forms and boundary
// kernels.

#include "qgt/lattice.hpp"
#include "qgt/numeric.hpp"
#include "qgt/qcalc.hpp"
#include "qgt/residue.hpp"
#include "qgt/symfunc.hpp"

#include <map>
#include <vector>

namespace qgt {

/// Atoms on configurations of one level plus a bound on the mass that the
/// truncation left out.  At level K a key with fewer than K points stands for
/// the configuration padded with zeros.
template <class T>
struct DiscreteMeasure {
  std::size_t level = 0;
  std::map<Config, T> atoms;
  double tail_bound = 0.0;

  T total() const {
    T s = lift<T>(Rational(0));
    for (const auto& [c, w] : atoms) s += w;
    return s;
  }
  T weight(const Config& c) const {
    auto it = atoms.find(c);
    return it == atoms.end() ? lift<T>(Rational(0)) : it->second;
  }
};

/// (q;q)_N |Y| |V(Y)| / |V(X)| if Y interlaces X, else 0.
Rational link_weight(const Config& x, const Config& y, const QParams& params);

/// Lambda^{N+1}_N(X, .) with points of modulus below min_abs dropped from the
/// straddling interval (the only infinite one).  min_abs is ignored for
/// single-sign X.
DiscreteMeasure<Rational> link_measure(const Config& x, const Rational& min_abs, const QParams& params);

/// M Lambda^{L}_{L-1} for a measure M on zero-free configurations of level L.
/// Tail bounds add up.
template <class T>
DiscreteMeasure<T> push_forward(const DiscreteMeasure<T>& m, const Rational& min_abs, const QParams& params);

extern template DiscreteMeasure<Rational> push_forward<Rational>(const DiscreteMeasure<Rational>&, const Rational&,
                                                                 const QParams&);
extern template DiscreteMeasure<Real> push_forward<Real>(const DiscreteMeasure<Real>&, const Rational&,
                                                         const QParams&);

/// Lambda^N_K(X, .) as the composition of link kernels.  T is Rational (exact,
/// any X as long as min_abs cuts the infinite intervals) or Real.
template <class T>
DiscreteMeasure<T> telescope(const Config& x, std::size_t k, const Rational& min_abs, const QParams& params);

extern template DiscreteMeasure<Rational> telescope<Rational>(const Config&, std::size_t, const Rational&,
                                                              const QParams&);
extern template DiscreteMeasure<Real> telescope<Real>(const Config&, std::size_t, const Rational&,
                                                      const QParams&);

/// Lambda^N_1(X, y) by the finite residue sum; zeros of X only enter the
/// denominators.
Rational lambda_closed_n1(const ExtConfig& x, const LatticePoint& y, const QParams& params);

/// Lambda^N_K(X, Y) by the K x K determinant of residue sums.
Rational lambda_closed_nk(const ExtConfig& x, const Config& y, const QParams& params);

/// Lambda^inf_K(X, Y) for a finite configuration X, from the residue form with
/// infinite products.  error_bound covers the truncation of the products.
TruncatedValue<Real> lambda_inf_residue(const Config& x, const Config& y, const QParams& params, double tol);

/// Result of a Cauchy-stabilized limit.
struct LimitTrace {
  Real value;
  std::vector<double> increments;  // |v_{n+1} - v_n| along the sequence
  long final_level = 0;
};

/// Lambda^inf_K(X, Y) as lim_N Lambda^N_K(X u 0^{N-|X|}, Y).
LimitTrace lambda_inf(const Config& x, const Config& y, const QParams& params, double tol,
                      long max_level = 400);

/// Evaluation points z_j, off the real axis and pairwise distinct.
using EvalPoints = std::vector<CxRational>;
void check_eval_points(const EvalPoints& z);

/// f_{Z,N,K}(Y) with K = |Y| = |Z|.
CxRational eval_f_z(const EvalPoints& z, const Config& y, long n, const QParams& params);
/// f_{A|Z,N,K}(Y) with K = |Y| = |A| + |Z|; zero unless A is contained in Y.
CxRational eval_f_az(const Config& a, const EvalPoints& z, const Config& y, long n, const QParams& params);

/// prod_i (q;q)_{N-i} / ((q;q)_{K-i} (q;q)_{N-K}).
Rational kernel_prefactor(long n, long k, const Rational& q);

/// The image Lambda^N_K f_{A|Z,N,K} at X in closed form, N = X.level(),
/// K = |A| + |Z|.  Implemented for |A| <= 1; |A| = K and K = 1 is the kernel
/// entry itself.  X may carry zeros.
CxRational image_f_az(const ExtConfig& x, const Config& a, const EvalPoints& z, long k, const QParams& params);

/// Residual report for an identity checked on a truncated sum.
struct Residual {
  double value = 0.0;      // |lhs - rhs|
  double tail_bound = 0.0; // what the truncation may account for
  bool exact = false;      // true when both sides were exact rationals
};

/// Sum_Y Lambda^N_K(X, Y) f_{Z,N,K}(Y) against the product formula.
Residual verify_f_z_image(const Config& x, const EvalPoints& z, const Rational& min_abs, const QParams& params);
/// The same for f_{A|Z,N,K} with |A| <= 1.
Residual verify_f_az_image(const Config& x, const Config& a, const EvalPoints& z, const Rational& min_abs,
                       const QParams& params);

/// Residual of sum_Y Lambda^N_K(X,Y) S~_{nu|K}(Y) = S~_{nu|N}(X).  For X with
/// zeros this is supported when nu is empty or length(nu) = K (Y carrying a
/// zero then contributes nothing); other cases throw std::domain_error.
Residual moment_check(const ExtConfig& x, std::size_t k, const Partition& nu, const Rational& min_abs,
                      const QParams& params);

/// Lambda^N_K(X, .) on zero-free Y for X with zeros, by the closed form over
/// all K-subsets of the support window with |y| >= min_abs.  The atom keyed by
/// the empty configuration collects the remaining mass (zero-carrying Y and
/// the truncated part).
DiscreteMeasure<Rational> extended_kernel(const ExtConfig& x, std::size_t k, const Rational& min_abs,
                                          const QParams& params);

/// (1-q)(q;q)_inf / prod_{i>=0}(1+q^i), the lower bound for the mass at the
/// extreme point.
TruncatedValue<Real> extreme_mass_bound(const Rational& q, double tol);

/// Lambda^N_1(X, x0) at the point of X of maximal modulus.
Rational extreme_point_mass(const ExtConfig& x, const QParams& params);

/// (1 - q^{N-1})|y| (1/2 pi i) int_{C(y)} (y q/z;q)_{N-2} / (u/z;q)_N dz/z^2,
/// closing the contour on the given side.
Rational orthogonality_residue(const LatticePoint& u, const LatticePoint& y, long n, const QParams& params,
                               Closure closure);

}  // namespace qgt
