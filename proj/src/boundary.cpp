#include "qgt/boundary.hpp"

#include <cmath>
#include <stdexcept>

namespace qgt {

namespace {

// Points of the smallest segment containing X and 0 with |y| >= min_abs.
std::vector<LatticePoint> support_window(const Config& x, const Rational& min_abs, const QParams& params) {
  std::vector<LatticePoint> window;
  if (x.has_negative()) {
    auto neg = ray_points_down_to(x[0], min_abs, params);
    window.insert(window.end(), neg.begin(), neg.end());
  }
  if (x.has_positive()) {
    auto pos = ray_points_down_to(x[x.size() - 1], min_abs, params);
    window.insert(window.end(), pos.rbegin(), pos.rend());
  }
  return window;
}

// Columns of the residue matrix for Lambda^inf_K, one per window point:
// y sum_{x in X(y)} x^{i-K-2+n} (yq/x;q)_inf / prod_{x' != x}(x - x').
std::vector<std::vector<Real>> inf_columns(const Config& x, const std::vector<LatticePoint>& window, std::size_t k,
                                           const QParams& params, double tol) {
  const Rational& q = params.q();
  auto xs = values(x, params);
  const long n = static_cast<long>(xs.size());
  std::vector<Rational> den(xs.size(), Rational(1));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (i != j) den[i] *= xs[i] - xs[j];
  std::vector<std::vector<Real>> cols;
  cols.reserve(window.size());
  for (const auto& p : window) {
    Rational y = value(p, params);
    std::vector<Real> col(k, Real(0));
    for (std::size_t t = 0; t < xs.size(); ++t) {
      const Rational& xv = xs[t];
      if (!(y > 0 ? xv >= y : xv <= y)) continue;
      Real base = q_pochhammer_inf(Real(y * q / xv), q, tol).value * Real(y / den[t]);
      for (std::size_t i = 1; i <= k; ++i)
        col[i - 1] += base * Real(pow_int(xv, static_cast<long>(i) - static_cast<long>(k) - 2 + n));
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

DiscreteMeasure<Real> family_level(const Config& x, std::size_t k, const std::vector<LatticePoint>& window,
                                   const QParams& params, double tol) {
  DiscreteMeasure<Real> out;
  out.level = k;
  auto cols = inf_columns(x, window, k, params, tol * 1e-3);
  std::vector<Real> wvals;
  for (const auto& p : window) wvals.push_back(Real(value(p, params)));
  Rational pref(1);
  for (std::size_t i = 1; i <= k; ++i) pref /= q_pochhammer<Rational>(params.q(), params.q(), static_cast<long>(k - i));
  const Real rpref(pref);

  Real total(0);
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
    if (depth == k) {
      Matrix<Real> a(k, std::vector<Real>(k));
      Real v(1);
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < k; ++i) a[i][j] = cols[idx[j]][i];
        for (std::size_t l = j + 1; l < k; ++l) v *= wvals[idx[j]] - wvals[idx[l]];
      }
      Real w = rpref * v * determinant(std::move(a));
      if (w == 0) return;
      std::vector<LatticePoint> pts;
      for (auto i : idx) pts.push_back(window[i]);
      total += w;
      out.atoms.emplace(Config::from_sorted(std::move(pts)), std::move(w));
      return;
    }
    for (std::size_t i = from; i + (k - depth) <= window.size(); ++i) {
      idx[depth] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 0);
  Real rest = Real(1) - total;
  out.tail_bound = std::fabs(to_double(rest));
  if (rest != 0) out.atoms.emplace(Config(), rest);
  return out;
}

}  // namespace

CoherentFamily extreme_family(const Config& x, std::size_t k_max, const Rational& min_abs, const QParams& params,
                              double tol) {
  if (k_max < 1) throw std::invalid_argument("need k_max >= 1");
  if (!(min_abs > 0)) throw std::invalid_argument("min_abs must be positive");
  CoherentFamily fam;
  fam.source = x;
  auto window = support_window(x, min_abs, params);
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (x.empty()) {
      DiscreteMeasure<Real> delta;
      delta.level = k;
      delta.atoms.emplace(Config(), Real(1));
      fam.levels.emplace(k, std::move(delta));
      continue;
    }
    fam.levels.emplace(k, family_level(x, k, window, params, tol));
  }
  return fam;
}

double coherence_check(const CoherentFamily& fam, std::size_t k, const Rational& min_abs, const QParams& params) {
  auto lo = fam.levels.find(k);
  auto hi = fam.levels.find(k + 1);
  if (lo == fam.levels.end() || hi == fam.levels.end()) throw std::invalid_argument("levels K and K+1 required");
  if (fam.source && !fam.source->empty() && k >= fam.source->size())
    throw std::domain_error("coherence needs K < |X|; higher levels keep zero-carrying mass lumped");
  DiscreteMeasure<Real> upper;
  upper.level = k + 1;
  for (const auto& [z, w] : hi->second.atoms)
    if (z.size() == k + 1) upper.atoms.emplace(z, w);
  if (upper.atoms.empty()) {
    // Everything sits on configurations with zeros: compare the lumped masses.
    return magnitude(Real(hi->second.weight(Config()) - lo->second.weight(Config())));
  }
  auto pushed = push_forward(upper, min_abs, params);
  double worst = 0.0;
  for (const auto& [y, w] : lo->second.atoms) {
    if (y.size() != k) continue;
    worst = std::max(worst, magnitude(Real(pushed.weight(y) - w)));
  }
  for (const auto& [y, w] : pushed.atoms)
    if (!lo->second.atoms.count(y)) worst = std::max(worst, magnitude(w));
  return worst;
}

Residual boundary_moment_check(const Config& x, std::size_t k, const Partition& nu, const Rational& min_abs,
                               const QParams& params, double tol) {
  if (nu.length() > k) throw std::invalid_argument("partition longer than K");
  auto fam = extreme_family(x, k, min_abs, params, tol);
  const auto& mk = fam.levels.at(k);
  const Rational denom = schur_principal(nu, static_cast<long>(k), params.q());
  Real lhs(0);
  double lumped = 0.0;
  for (const auto& [y, w] : mk.atoms) {
    if (y.size() != k) {
      // Zeros kill S_nu for length(nu) = K; otherwise evaluate at Y u 0^{K-|Y|}.
      if (nu.empty()) lhs += w;
      else lumped += magnitude(w);
      continue;
    }
    lhs += w * Real(schur(nu, ExtConfig(y), params) / denom);
  }
  auto rhs = normalized_schur_inf(nu, ExtConfig(x), params, tol);
  Residual r;
  r.value = magnitude(Real(lhs - rhs.value));
  Rational radius(0);
  for (const auto& p : x) radius = std::max(radius, abs(value(p, params)));
  std::vector<Rational> ones(k, Rational(1));
  r.tail_bound = rhs.error_bound +
                 lumped * to_double(pow_int(radius, nu.size()) * schur_values<Rational>(nu, ones) / denom);
  return r;
}

LimitTrace regular_limit(const std::function<ExtConfig(long)>& sequence, const Config& limit, const Rational& eps,
                         long start, const Config& y, const QParams& params, double tol, long max_level) {
  auto outside = [&](const Config& c) {
    std::vector<LatticePoint> pts;
    for (const auto& p : c)
      if (abs(value(p, params)) >= eps) pts.push_back(p);
    return pts;
  };
  const auto head = outside(limit);
  if (head.size() != limit.size()) throw std::invalid_argument("eps must not exceed the limit's smallest point");
  LimitTrace trace;
  std::optional<Rational> prev;
  for (long level = start; level <= max_level; ++level) {
    ExtConfig xn = sequence(level);
    if (static_cast<long>(xn.level()) != level) throw std::invalid_argument("sequence element has the wrong level");
    if (outside(xn.nonzero) != head) throw std::invalid_argument("sequence does not coincide with the limit outside (-eps, eps)");
    Rational v = lambda_closed_nk(xn, y, params);
    if (prev) trace.increments.push_back(magnitude(Rational(v - *prev)));
    prev = v;
    const auto s = trace.increments.size();
    if (s >= 2 && trace.increments[s - 1] < tol && trace.increments[s - 2] < tol) {
      trace.value = Real(v);
      trace.final_level = level;
      return trace;
    }
  }
  throw ConvergenceError("regular sequence did not stabilize");
}

}  // namespace qgt
