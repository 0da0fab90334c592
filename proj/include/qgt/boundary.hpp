#pragma once

// Coherent families on the extended graph: the extreme families attached to
// finite configurations, their coherence and moment relations, and limits
// along regular sequences.

#include "qgt/kernels.hpp"
#include "qgt/lattice.hpp"
#include "qgt/symfunc.hpp"

#include <functional>
#include <map>
#include <optional>

namespace qgt {

struct CoherentFamily {
  /// Level K -> M_K.  Atoms on zero-free configurations; the empty key holds
  /// the mass of configurations carrying zeros together with whatever the
  /// min_abs cutoff left out, so each level sums to 1.
  std::map<std::size_t, DiscreteMeasure<Real>> levels;
  std::optional<Config> source;
};

/// M^{(X)}_K for K = 1..k_max from the residue form of Lambda^inf_K, over all
/// zero-free Y inside the smallest segment containing X and 0 with
/// |y| >= min_abs.  tail_bound of each level is the lumped remainder.
CoherentFamily extreme_family(const Config& x, std::size_t k_max, const Rational& min_abs, const QParams& params,
                              double tol);

/// max over the zero-free atoms Y of M_K of |(M_{K+1} Lambda^{K+1}_K)(Y) - M_K(Y)|.
/// Levels K and K+1 must be present, and M_{K+1} must not have lumped mass
/// beyond truncation (i.e. its source has at least K+1 points); domain_error otherwise.
double coherence_check(const CoherentFamily& fam, std::size_t k, const Rational& min_abs, const QParams& params);

/// |sum_Y M_K(Y) S~_{nu|K}(Y) - S~_{nu|inf}(X)| for the family of X.
Residual boundary_moment_check(const Config& x, std::size_t k, const Partition& nu, const Rational& min_abs,
                               const QParams& params, double tol);

/// lim_N Lambda^N_K(X(N), Y) for a sequence given level by level.  The
/// sequence must have X(N) at level N and coincide with the limit outside
/// (-eps, eps) from `start` on; this is checked, not assumed.
LimitTrace regular_limit(const std::function<ExtConfig(long)>& sequence, const Config& limit, const Rational& eps,
                         long start, const Config& y, const QParams& params, double tol, long max_level = 400);

}  // namespace qgt
