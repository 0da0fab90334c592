#pragma once

// Sampling the down chain Y ~ Lambda^N_K(X, .) by exact inverse CDF, plus
// the statistical checks built on it.

#include "qgt/kernels.hpp"
#include "qgt/lattice.hpp"
#include "qgt/symfunc.hpp"

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

namespace qgt {

/// Counter-based generator: the k-th output is a SplitMix64 finalizer applied
/// to (seed, stream, k), so streams are reproducible and independent of the
/// order in which they are consumed.
class RngState {
 public:
  explicit RngState(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {}

  std::uint64_t next();
  /// Exactly k / 2^64 for the next output k.
  Rational uniform_rational();
  double uniform();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

struct ChainSample {
  Config result;
  std::vector<Config> trajectory;  // X, then each level down to K
};

/// Inverse-CDF sampler for link kernels.  Atoms are laid out by decreasing
/// weight; when the uniform lands in the mass not yet enumerated, the cutoff
/// is lowered and the new atoms are appended after the old ones, which keeps
/// the layout of the already enumerated part unchanged.
class LinkSampler {
 public:
  explicit LinkSampler(QParams params, Rational initial_min_abs = Rational(1, 1 << 20));

  Config sample_link(const Config& x, RngState& rng);
  ChainSample sample_chain(const Config& x, std::size_t k, RngState& rng);

 private:
  struct Ladder {
    std::vector<Config> atoms;
    std::vector<Rational> cumulative;
    Rational min_abs;
    bool complete = false;
  };
  void deepen(const Config& x, Ladder& ladder);

  QParams params_;
  Rational initial_min_abs_;
  std::unordered_map<Config, Ladder, ConfigHash> cache_;
};

struct MomentTest {
  double z = 0.0;
  double mean = 0.0;
  double target = 0.0;
  double std_error = 0.0;
  long samples = 0;
};

/// (sample mean of S~_{nu|K}(Y) - S~_{nu|N}(X)) / standard error.
MomentTest empirical_moment_test(const Config& x, std::size_t k, const Partition& nu, long n_samples,
                                 std::uint64_t seed, const QParams& params);

struct ChiSquare {
  double statistic = 0.0;
  long dof = 0;
  double p_value = 1.0;
};

/// Pearson goodness of fit of observed counts against exact atom weights.
/// Atoms with expected count below 5 are pooled into one cell.
ChiSquare chi_square_test(const std::map<Config, long>& counts, const DiscreteMeasure<Rational>& exact, long n);

}  // namespace qgt
