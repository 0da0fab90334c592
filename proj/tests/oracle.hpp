#pragma once

// Brute-force reference computations used as test oracles.  They share no
// code with the library beyond the number types and lattice encoding.

#include "qgt/lattice.hpp"
#include "qgt/numeric.hpp"

#include <vector>

namespace oracle {

using qgt::Rational;

inline qgt::QParams canon() { return qgt::QParams::canonical(); }

inline qgt::Config cfg(const char* text) { return qgt::parse_config(text); }

inline Rational val(const qgt::LatticePoint& p, const qgt::QParams& par) {
  Rational v = p.positive() ? par.zeta_plus() : par.zeta_minus();
  for (long i = 0; i < p.exponent; ++i) v *= par.q();
  for (long i = 0; i > p.exponent; --i) v /= par.q();
  return v;
}

inline std::vector<Rational> vals(const qgt::Config& c, const qgt::QParams& par) {
  std::vector<Rational> out;
  for (const auto& p : c) out.push_back(val(p, par));
  return out;
}

inline Rational qq(const Rational& q, long n) {
  Rational r(1), qi = q;
  for (long i = 0; i < n; ++i, qi *= q) r *= Rational(1) - qi;
  return r;
}

inline Rational abs_vdm(const std::vector<Rational>& a) {
  Rational v(1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) v *= a[j] > a[i] ? Rational(a[j] - a[i]) : Rational(a[i] - a[j]);
  return v;
}

// Brute-force interlacing check straight from the three interval cases.
inline bool in_interval(const Rational& a, const Rational& b, const Rational& y) {
  if (b < 0) return a <= y && y < b;
  if (a > 0) return a < y && y <= b;
  return a <= y && y <= b;
}

// The link weight of X -> Y from its definition.
inline Rational link(const qgt::Config& x, const qgt::Config& y, const qgt::QParams& par) {
  auto xv = vals(x, par), yv = vals(y, par);
  for (std::size_t i = 0; i < yv.size(); ++i)
    if (!in_interval(xv[i], xv[i + 1], yv[i])) return 0;
  Rational absy(1);
  for (auto& v : yv) absy *= v < 0 ? Rational(-v) : v;
  return qq(par.q(), static_cast<long>(yv.size())) * absy * abs_vdm(yv) / abs_vdm(xv);
}

// All single-sign Y interlacing X, by exhaustive search over the exponent range.
inline void all_children(const qgt::Config& x, std::vector<qgt::Config>& out) {
  std::vector<std::vector<qgt::LatticePoint>> choices;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    std::vector<qgt::LatticePoint> c;
    auto lo = std::min(x[i].exponent, x[i + 1].exponent), hi = std::max(x[i].exponent, x[i + 1].exponent);
    for (long n = lo; n <= hi; ++n) {
      qgt::LatticePoint p{x[i].sign, n};
      if (x[i].sign == x[i + 1].sign && (p == x[i] ? !p.positive() : true) && (p == x[i + 1] ? p.positive() : true))
        c.push_back(p);
    }
    choices.push_back(c);
  }
  std::vector<qgt::LatticePoint> cur;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == choices.size()) {
      out.push_back(qgt::Config(cur));
      return;
    }
    for (auto& p : choices[i]) {
      if (!cur.empty() && !(cur.back() < p)) continue;
      cur.push_back(p);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace oracle
