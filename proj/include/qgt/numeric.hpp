#pragma once

// Scalar tiers used throughout the library.
//
// Rational is exact (GMP).  Real is an MPFR float whose working precision is
// set process-wide through set_precision(); it is only used where a value is
// the limit of an infinite product or sum, and always alongside a tail bound.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qgt {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultDigits = 64;

/// Sets the decimal precision of newly created Real values.
void set_precision(unsigned digits);
unsigned precision();

/// Parses "p", "p/q" or a decimal literal such as "1e-9" / "0.25" exactly.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& x);
std::string to_string(const Real& x, unsigned digits);

inline Real to_real(const Rational& x) { return Real(x); }
inline Real to_real(const Real& x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(const Real& x) { return x.convert_to<double>(); }
inline double to_double(double x) { return x; }

/// base^n for any integer n (negative powers invert).
template <class T>
T pow_int(const T& base, long n) {
  if (n < 0) return T(1) / pow_int(base, -n);
  T result(1);
  T b = base;
  auto e = static_cast<unsigned long>(n);
  while (e) {
    if (e & 1UL) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Real& x) { return x == 0; }
inline bool is_zero(double x) { return x == 0.0; }

inline int sign_of(const Rational& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

// ---------------------------------------------------------------------------
// Complex numbers over an arbitrary field.  std::complex is only specified for
// the built-in floating types, so exact complex rationals need their own type.

template <class T>
struct Cx {
  T re{0};
  T im{0};

  Cx() = default;
  Cx(T r) : re(std::move(r)), im(0) {}  // NOLINT: implicit real embedding
  Cx(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
  Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
  Cx& operator*=(const Cx& o) {
    T r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Cx& operator/=(const Cx& o) {
    T d = o.re * o.re + o.im * o.im;
    if (is_zero(d)) throw std::domain_error("complex division by zero");
    T r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }
  Cx operator-() const { return Cx(T(-re), T(-im)); }

  friend Cx operator+(Cx a, const Cx& b) { return a += b; }
  friend Cx operator-(Cx a, const Cx& b) { return a -= b; }
  friend Cx operator*(Cx a, const Cx& b) { return a *= b; }
  friend Cx operator/(Cx a, const Cx& b) { return a /= b; }
  friend bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Cx& a, const Cx& b) { return !(a == b); }

  T norm2() const { return re * re + im * im; }
  Cx inverse() const { return Cx(T(1)) / *this; }
};

using CxRational = Cx<Rational>;
using CxReal = Cx<Real>;

template <class T>
bool is_zero(const Cx<T>& z) { return is_zero(z.re) && is_zero(z.im); }

inline std::complex<double> to_complex_double(const CxRational& z) {
  return {to_double(z.re), to_double(z.im)};
}
inline std::complex<double> to_complex_double(const CxReal& z) {
  return {to_double(z.re), to_double(z.im)};
}
inline CxReal to_real(const CxRational& z) { return {to_real(z.re), to_real(z.im)}; }

/// |z| as a double; used for pivoting and for residual reporting.
inline double magnitude(const Rational& x) { return std::fabs(to_double(x)); }
inline double magnitude(const Real& x) { return std::fabs(to_double(x)); }
inline double magnitude(double x) { return std::fabs(x); }
template <class T>
double magnitude(const Cx<T>& z) { return std::hypot(magnitude(z.re), magnitude(z.im)); }
inline double magnitude(const std::complex<double>& z) { return std::abs(z); }

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Determinant by Gaussian elimination with partial pivoting.  Works over any
/// field type above; exact types give the exact determinant.
template <class T>
T determinant(Matrix<T> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    double best = -1.0;
    for (std::size_t r = col; r < n; ++r) {
      if (is_zero(m[r][col])) continue;
      double mag = magnitude(m[r][col]);
      if (pivot == n || mag > best) {
        pivot = r;
        best = mag;
      }
    }
    if (pivot == n) return T(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m[r][col])) continue;
      T factor = m[r][col] / m[col][col];
      for (std::size_t c = col + 1; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

/// Embeds an exact rational into another scalar tier.
template <class T>
struct Lift {
  static T from(const Rational& x) { return T(x); }
};
template <>
struct Lift<double> {
  static double from(const Rational& x) { return to_double(x); }
};
template <>
struct Lift<Real> {
  static Real from(const Rational& x) { return Real(x); }
};
template <class T>
struct Lift<Cx<T>> {
  static Cx<T> from(const Rational& x) { return Cx<T>(Lift<T>::from(x)); }
};
template <>
struct Lift<std::complex<double>> {
  static std::complex<double> from(const Rational& x) { return {to_double(x), 0.0}; }
};

template <class T>
T lift(const Rational& x) { return Lift<T>::from(x); }

}  // namespace qgt
