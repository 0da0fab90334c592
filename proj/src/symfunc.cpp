#include "qgt/symfunc.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace qgt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

long Partition::n_statistic() const {
  long s = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<long>(i) * parts_[i];
  return s;
}

std::vector<int> Partition::hooks() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    for (int j = 0; j < parts_[i]; ++j) {
      int arm = parts_[i] - j - 1;
      int leg = 0;
      for (std::size_t k = i + 1; k < parts_.size() && parts_[k] > j; ++k) ++leg;
      out.push_back(arm + leg + 1);
    }
  return out;
}

std::vector<int> Partition::contents() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    for (int j = 0; j < parts_[i]; ++j) out.push_back(j - static_cast<int>(i));
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size, std::size_t max_length) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n)
    for (auto& p : partitions_of(n))
      if (p.length() <= max_length) out.push_back(std::move(p));
  return out;
}

std::string to_string(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + "]";
}

Partition parse_partition(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw std::invalid_argument("partition must look like [a,b,...]");
  t = t.substr(1, t.size() - 2);
  std::vector<int> parts;
  std::size_t start = 0;
  while (!t.empty() && start <= t.size()) {
    auto comma = t.find(',', start);
    auto piece = t.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (piece.empty() || !std::all_of(piece.begin(), piece.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("malformed partition part: " + piece);
    parts.push_back(std::stoi(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

Rational h_m(int m, const ExtConfig& x, const QParams& params) {
  if (m < 0) return Rational(0);
  auto v = values(x.nonzero, params);
  return complete_homogeneous<Rational>(v, m)[m];
}

Rational h_principal(int m, long n, const Rational& q) {
  if (m < 0) return Rational(0);
  return q_pochhammer<Rational>(pow_int(q, n), q, m) / q_pochhammer<Rational>(q, q, m);
}

Rational schur(const Partition& nu, const ExtConfig& x, const QParams& params) {
  if (nu.length() > x.level()) throw std::invalid_argument("partition longer than the configuration level");
  auto v = values(x.nonzero, params);
  return schur_values<Rational>(nu, v);
}

Rational schur_principal(const Partition& nu, long n, const Rational& q) {
  if (static_cast<long>(nu.length()) > n) throw std::invalid_argument("partition longer than the number of variables");
  std::vector<Rational> prog;
  Rational t(1);
  for (long i = 0; i < n; ++i) {
    prog.push_back(t);
    t *= q;
  }
  return schur_values<Rational>(nu, prog);
}

Rational normalized_schur(const Partition& nu, const ExtConfig& x, const QParams& params) {
  return schur(nu, x, params) / schur_principal(nu, static_cast<long>(x.level()), params.q());
}

TruncatedValue<Real> schur_principal_inf(const Partition& nu, const Rational& q, double tol) {
  if (nu.empty()) return {Real(1), 0.0, 0};
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  const auto contents = nu.contents();
  const double qd = to_double(q);
  // The true value is S_M / prod(1 - q^{M+c}); pick M so that the relative gap
  // sum q^{M+c}/(1-q^{M+c}) stays below tol/4.
  long m = static_cast<long>(nu.length());
  auto gap = [&](long mm) {
    double g = 0;
    for (int c : contents) {
      double x = std::pow(qd, static_cast<double>(mm + c));
      if (x >= 0.5) return 1.0;
      g += x / (1 - x);
    }
    return g;
  };
  while (gap(m) > tol / 4) ++m;
  Real s(schur_principal(nu, m, q));
  double rel = std::expm1(gap(m));
  return {s, to_double(s) * rel, m};
}

TruncatedValue<Real> normalized_schur_inf(const Partition& nu, const ExtConfig& x, const QParams& params,
                                          double tol) {
  auto denom = schur_principal_inf(nu, params.q(), tol);
  auto v = values(x.nonzero, params);
  Real num(schur_values<Rational>(nu, v));
  Real value = num / denom.value;
  double rel = denom.error_bound / (to_double(denom.value) - denom.error_bound);
  return {value, std::fabs(to_double(value)) * rel, denom.terms};
}

}  // namespace qgt
