#include "qgt/numeric.hpp"

#include <cctype>

namespace qgt {

namespace {

unsigned g_digits = kDefaultDigits;

struct PrecisionInit {
  PrecisionInit() { Real::default_precision(kDefaultDigits); }
} const g_precision_init;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

void set_precision(unsigned digits) {
  g_digits = digits;
  Real::default_precision(digits);
}

unsigned precision() { return g_digits; }

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string s(text);
  try {
    if (s.find('/') != std::string::npos) return Rational(s);
    auto epos = s.find_first_of("eE");
    std::string mantissa = s.substr(0, epos);
    long exp10 = 0;
    if (epos != std::string::npos) exp10 = std::stol(s.substr(epos + 1));
    auto dot = mantissa.find('.');
    if (dot != std::string::npos) {
      exp10 -= static_cast<long>(mantissa.size() - dot - 1);
      mantissa.erase(dot, 1);
    }
    if (mantissa.empty() || mantissa == "-" || mantissa == "+") throw std::invalid_argument(s);
    if (mantissa.front() == '+') mantissa.erase(0, 1);
    Rational r{Integer(mantissa)};
    return r * pow_int(Rational(10), exp10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

std::string to_string(const Rational& x) { return x.str(); }

std::string to_string(const Real& x, unsigned digits) {
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

}  // namespace qgt
