#pragma once

// Vertical-line contour integrals of rational functions with simple real
// poles, evaluated as finite residue sums.
//
// For a line Re w = a oriented from top to bottom, (1/2 pi i) times the
// integral equals the sum of residues to the right of the line, and also
// minus the sum of residues to the left, as long as the integrand decays like
// |w|^-2 so that the residue at infinity vanishes.

#include "qgt/numeric.hpp"

#include <vector>

namespace qgt {

enum class Closure { Right, Left };

/// Integrand scale * prod_r (w - roots[r]) / prod_p (w - poles[p]).  Poles on
/// the summed side must be simple; repeated poles (e.g. a cluster at 0) are
/// allowed on the other side only.
template <class C>
struct RationalIntegrand {
  C scale = lift<C>(Rational(1));
  std::vector<C> roots;
  std::vector<Rational> poles;

  C numerator(const Rational& w) const {
    C v = scale;
    const C wc = lift<C>(w);
    for (const auto& r : roots) v *= wc - r;
    return v;
  }

  /// Residue at the simple pole poles[k].
  C residue(std::size_t k) const {
    const Rational& p = poles[k];
    C v = numerator(p);
    Rational d(1);
    for (std::size_t j = 0; j < poles.size(); ++j)
      if (j != k) d *= p - poles[j];
    if (d == 0) throw std::domain_error("residue requested at a multiple pole");
    return v / lift<C>(d);
  }

  /// (1/2 pi i) * integral over Re w = abscissa, top to bottom.
  C line_integral(const Rational& abscissa, Closure closure) const {
    if (poles.size() < roots.size() + 2)
      throw std::domain_error("integrand does not decay like |w|^-2");
    C sum = lift<C>(Rational(0));
    for (std::size_t k = 0; k < poles.size(); ++k) {
      if (poles[k] == abscissa) throw std::domain_error("pole on the contour");
      bool right = poles[k] > abscissa;
      if (right == (closure == Closure::Right)) sum += residue(k);
    }
    return closure == Closure::Right ? sum : lift<C>(Rational(0)) - sum;
  }
};

}  // namespace qgt
