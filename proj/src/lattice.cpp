#include "qgt/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qgt {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

QParams::QParams(Rational q, Rational zeta_plus, Rational zeta_minus)
    : q_(std::move(q)), zeta_plus_(std::move(zeta_plus)), zeta_minus_(std::move(zeta_minus)) {
  if (!(q_ > 0 && q_ < 1)) throw std::invalid_argument("q must lie in (0,1)");
  if (!(zeta_plus_ > 0)) throw std::invalid_argument("zeta_plus must be positive");
  if (!(zeta_minus_ < 0)) throw std::invalid_argument("zeta_minus must be negative");
}

QParams QParams::canonical() { return QParams(Rational(1, 2), Rational(1), Rational(-1)); }

std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) {
  if (a.sign != b.sign) return a.sign == Sign::Minus ? std::strong_ordering::less : std::strong_ordering::greater;
  // Positive ray: larger exponent means smaller value.  Negative ray: larger
  // exponent means closer to 0, hence larger value.
  if (a.sign == Sign::Plus) return b.exponent <=> a.exponent;
  return a.exponent <=> b.exponent;
}

Rational value(const LatticePoint& p, const QParams& params) {
  const Rational& zeta = p.positive() ? params.zeta_plus() : params.zeta_minus();
  return zeta * pow_int(params.q(), p.exponent);
}

Config::Config(std::vector<LatticePoint> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
    throw std::invalid_argument("configuration has a repeated point");
}

bool Config::contains(const LatticePoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

bool Config::has_positive() const { return !points_.empty() && points_.back().positive(); }
bool Config::has_negative() const { return !points_.empty() && !points_.front().positive(); }

std::size_t ConfigHash::operator()(const Config& c) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ c.size();
  for (const auto& p : c) {
    auto v = static_cast<std::size_t>(p.exponent) * 2 + (p.positive() ? 1 : 0);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<Rational> values(const Config& c, const QParams& params) {
  std::vector<Rational> out;
  out.reserve(c.size());
  for (const auto& p : c) out.push_back(value(p, params));
  return out;
}

std::vector<Rational> values(const ExtConfig& c, const QParams& params) {
  auto out = values(c.nonzero, params);
  out.resize(c.level(), Rational(0));
  return out;
}

bool interval_contains(const LatticePoint& a, const LatticePoint& a_right, const LatticePoint& y) {
  if (!(a < a_right)) throw std::invalid_argument("interval requires a < a'");
  if (!a_right.positive()) return a <= y && y < a_right;  // a < a' < 0
  if (a.positive()) return a < y && y <= a_right;         // 0 < a < a'
  return a <= y && y <= a_right;                          // a < 0 < a'
}

bool interlaces(const Config& x, const Config& y) {
  if (x.size() != y.size() + 1) throw std::invalid_argument("interlacing requires |X| = |Y| + 1");
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!interval_contains(x[i], x[i + 1], y[i])) return false;
  return true;
}

long deepest_exponent(Sign sign, const Rational& min_abs, const QParams& params) {
  if (!(min_abs > 0)) throw std::invalid_argument("min_abs must be positive");
  const Rational zeta = abs(sign == Sign::Plus ? params.zeta_plus() : params.zeta_minus());
  // Initial guess from doubles, then fix up exactly.
  double guess = std::log(to_double(min_abs / zeta)) / std::log(to_double(params.q()));
  long n = std::isfinite(guess) ? static_cast<long>(std::floor(guess)) : 0;
  while (zeta * pow_int(params.q(), n) < min_abs) --n;
  while (zeta * pow_int(params.q(), n + 1) >= min_abs) ++n;
  return n;
}

std::vector<LatticePoint> ray_points_down_to(const LatticePoint& bound, const Rational& min_abs,
                                             const QParams& params) {
  std::vector<LatticePoint> out;
  long last = deepest_exponent(bound.sign, min_abs, params);
  for (long n = bound.exponent; n <= last; ++n) out.push_back({bound.sign, n});
  return out;
}

Rational small_point_mass(Sign sign, const Rational& threshold, const LatticePoint& cap,
                          const QParams& params) {
  if (!(threshold > 0)) return Rational(0);
  long first = std::max(deepest_exponent(sign, threshold, params) + 1, cap.exponent);
  const Rational zeta = abs(sign == Sign::Plus ? params.zeta_plus() : params.zeta_minus());
  return zeta * pow_int(params.q(), first) / (Rational(1) - params.q());
}

std::vector<LatticePoint> enumerate_interval(const LatticePoint& a, const LatticePoint& a_right,
                                             const Rational& min_abs, const QParams& params) {
  if (!(a < a_right)) throw std::invalid_argument("interval requires a < a'");
  std::vector<LatticePoint> out;
  auto keep = [&](const LatticePoint& p) { return min_abs <= 0 || abs(value(p, params)) >= min_abs; };
  if (!a_right.positive()) {
    for (long n = a.exponent; n < a_right.exponent; ++n)
      if (keep(LatticePoint::minus(n))) out.push_back(LatticePoint::minus(n));
    return out;
  }
  if (a.positive()) {
    for (long n = a.exponent - 1; n >= a_right.exponent; --n)
      if (keep(LatticePoint::plus(n))) out.push_back(LatticePoint::plus(n));
    return out;
  }
  if (!(min_abs > 0))
    throw std::domain_error("mixed-sign interval is infinite; a positive min_abs is required");
  out = ray_points_down_to(a, min_abs, params);
  auto pos = ray_points_down_to(a_right, min_abs, params);
  out.insert(out.end(), pos.rbegin(), pos.rend());
  return out;
}

std::string to_code(const LatticePoint& p) {
  return std::string(p.positive() ? "+:" : "-:") + std::to_string(p.exponent);
}

LatticePoint parse_point(std::string_view text) {
  text = trim(text);
  if (text.size() < 3 || (text[0] != '+' && text[0] != '-') || text[1] != ':')
    throw std::invalid_argument("malformed lattice point: " + std::string(text));
  long n = 0;
  auto digits = text.substr(2);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw std::invalid_argument("malformed lattice point: " + std::string(text));
  return {text[0] == '+' ? Sign::Plus : Sign::Minus, n};
}

std::string to_code(const Config& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += to_code(c[i]);
  }
  return out;
}

Config parse_config(std::string_view text) {
  text = trim(text);
  std::vector<LatticePoint> pts;
  if (text.empty()) return Config();
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    pts.push_back(parse_point(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Config(std::move(pts));
}

}  // namespace qgt
