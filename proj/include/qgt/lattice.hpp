#pragma once

// The two-sided q-lattice {zeta_- q^n} u {zeta_+ q^n}, its intervals and
// interlacing configurations.  Points are symbolic (sign, exponent) pairs so
// equality and ordering never go through floating values.

#include "qgt/numeric.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qgt {

/// Parameters of the lattice: 0 < q < 1, zeta_plus > 0, zeta_minus < 0.
class QParams {
 public:
  QParams(Rational q, Rational zeta_plus, Rational zeta_minus);

  /// q = 1/2, zeta_plus = 1, zeta_minus = -1.
  static QParams canonical();

  const Rational& q() const { return q_; }
  const Rational& zeta_plus() const { return zeta_plus_; }
  const Rational& zeta_minus() const { return zeta_minus_; }

 private:
  Rational q_;
  Rational zeta_plus_;
  Rational zeta_minus_;
};

enum class Sign : std::int8_t { Minus = -1, Plus = 1 };

struct LatticePoint {
  Sign sign = Sign::Plus;
  long exponent = 0;

  static LatticePoint plus(long n) { return {Sign::Plus, n}; }
  static LatticePoint minus(long n) { return {Sign::Minus, n}; }

  bool positive() const { return sign == Sign::Plus; }

  /// The point one step closer to 0 on the same ray (value times q).
  LatticePoint toward_zero(long steps = 1) const { return {sign, exponent + steps}; }

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  /// Order by value on the real line.
  friend std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b);
};

/// zeta_sign * q^n, exactly.
Rational value(const LatticePoint& p, const QParams& params);

/// Strictly increasing finite configuration on the lattice.  The empty
/// configuration is allowed.
class Config {
 public:
  Config() = default;
  /// Sorts the points; throws if two coincide.
  explicit Config(std::vector<LatticePoint> points);
  /// Trusts the caller that the points are already strictly increasing.
  static Config from_sorted(std::vector<LatticePoint> points) {
    Config c;
    c.points_ = std::move(points);
    return c;
  }

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const LatticePoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<LatticePoint>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains(const LatticePoint& p) const;
  bool has_positive() const;
  bool has_negative() const;

  friend bool operator==(const Config&, const Config&) = default;
  friend auto operator<=>(const Config& a, const Config& b) { return a.points_ <=> b.points_; }

 private:
  std::vector<LatticePoint> points_;
};

struct ConfigHash {
  std::size_t operator()(const Config& c) const noexcept;
};

/// Exact values of a configuration, in increasing order.
std::vector<Rational> values(const Config& c, const QParams& params);

/// A configuration together with a cluster of `zero_mult` points stuck at 0.
/// Its level is nonzero.size() + zero_mult.
struct ExtConfig {
  Config nonzero;
  std::size_t zero_mult = 0;

  ExtConfig() = default;
  ExtConfig(Config c, std::size_t zeros = 0) : nonzero(std::move(c)), zero_mult(zeros) {}  // NOLINT

  std::size_t level() const { return nonzero.size() + zero_mult; }

  friend bool operator==(const ExtConfig&, const ExtConfig&) = default;
};

/// Values with the zeros appended at the end (order is irrelevant for the
/// symmetric functions this feeds).
std::vector<Rational> values(const ExtConfig& c, const QParams& params);

/// Membership in I(a, a'): [a,a') for a<a'<0, [a,a'] for a<0<a', (a,a'] for 0<a<a'.
/// Throws std::invalid_argument unless a < a'.
bool interval_contains(const LatticePoint& a, const LatticePoint& a_right, const LatticePoint& y);

/// y_i in I(x_i, x_{i+1}) for every i.  Requires |x| = |y| + 1.
bool interlaces(const Config& x, const Config& y);

/// The points of I(a, a') with |value| >= min_abs, in increasing order.  A
/// mixed-sign interval with min_abs = 0 is infinite and rejected.
std::vector<LatticePoint> enumerate_interval(const LatticePoint& a, const LatticePoint& a_right,
                                             const Rational& min_abs, const QParams& params);

/// Points on one ray with min_abs <= |value| <= |bound| where bound is on that
/// ray; ordered from bound toward 0.
std::vector<LatticePoint> ray_points_down_to(const LatticePoint& bound, const Rational& min_abs,
                                             const QParams& params);

/// Largest exponent n with |zeta q^n| >= min_abs on the given ray (min_abs > 0).
long deepest_exponent(Sign sign, const Rational& min_abs, const QParams& params);

/// Sum of |y| over lattice points y of the given ray with |y| < threshold and
/// |y| <= |cap|; a closed-form geometric series.
Rational small_point_mass(Sign sign, const Rational& threshold, const LatticePoint& cap,
                          const QParams& params);

// Text codes: "+:n" / "-:n"; configurations are comma separated codes.
std::string to_code(const LatticePoint& p);
LatticePoint parse_point(std::string_view text);
std::string to_code(const Config& c);
Config parse_config(std::string_view text);

}  // namespace qgt
