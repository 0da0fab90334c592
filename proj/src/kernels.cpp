#include "qgt/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace qgt {

namespace {

Rational qq_poch(long n, const Rational& q) { return q_pochhammer<Rational>(q, q, n); }

// Lattice values in the scalar tier T, memoized per point.
template <class T>
class ValueCache {
 public:
  explicit ValueCache(const QParams& params) : params_(params) {}

  const T& operator()(const LatticePoint& p) {
    auto key = (static_cast<unsigned long>(p.exponent) << 1) | (p.positive() ? 1UL : 0UL);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, lift<T>(value(p, params_))).first->second;
  }

 private:
  const QParams& params_;
  std::unordered_map<unsigned long, T> cache_;
};

template <class T>
T abs_t(const T& x) {
  return x < 0 ? T(-x) : x;
}

// |A| |V(A)| for sorted A.
template <class T>
T abs_prod_vandermonde(const Config& a, ValueCache<T>& vals) {
  T r = lift<T>(Rational(1));
  for (std::size_t i = 0; i < a.size(); ++i) {
    const T& ai = vals(a[i]);
    r *= abs_t(ai);
    for (std::size_t j = i + 1; j < a.size(); ++j) r *= vals(a[j]) - ai;
  }
  return r;
}

template <class T>
T abs_vandermonde(const Config& a, ValueCache<T>& vals) {
  T r = lift<T>(Rational(1));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) r *= vals(a[j]) - vals(a[i]);
  return r;
}

struct LinkCandidates {
  std::vector<std::vector<LatticePoint>> lists;
  int straddle = -1;
};

LinkCandidates link_candidates(const Config& z, const Rational& min_abs, const QParams& params) {
  LinkCandidates c;
  for (std::size_t i = 0; i + 1 < z.size(); ++i) {
    bool mixed = !z[i].positive() && z[i + 1].positive();
    if (mixed) c.straddle = static_cast<int>(i);
    c.lists.push_back(enumerate_interval(z[i], z[i + 1], mixed ? min_abs : Rational(0), params));
  }
  return c;
}

// Calls visit(points) for every tuple in the product of the lists.
template <class F>
void for_each_tuple(const std::vector<std::vector<LatticePoint>>& lists, F&& visit) {
  for (const auto& l : lists)
    if (l.empty()) return;
  std::vector<std::size_t> idx(lists.size(), 0);
  std::vector<LatticePoint> pts(lists.size());
  for (std::size_t i = 0; i < lists.size(); ++i) pts[i] = lists[i][0];
  while (true) {
    visit(pts);
    std::size_t d = lists.size();
    while (d > 0) {
      --d;
      if (++idx[d] < lists[d].size()) {
        pts[d] = lists[d][idx[d]];
        break;
      }
      idx[d] = 0;
      pts[d] = lists[d][0];
      if (d == 0) return;
    }
    if (lists.empty()) return;
  }
}

// Bound on the link mass from Z that falls on the dropped points of the
// straddling interval, divided by (q;q)_{k-1}/|V(Z)|.
double link_tail_factor(const Config& z, const LinkCandidates& cand, const Rational& min_abs,
                        const QParams& params) {
  if (cand.straddle < 0) return 0.0;
  const auto s = static_cast<std::size_t>(cand.straddle);
  const double m = to_double(min_abs);
  const double ts = to_double(small_point_mass(Sign::Minus, min_abs, z[s], params) +
                              small_point_mass(Sign::Plus, min_abs, z[s + 1], params));
  std::vector<std::vector<LatticePoint>> others;
  for (std::size_t i = 0; i < cand.lists.size(); ++i)
    if (i != s) others.push_back(cand.lists[i]);
  double sum = 0.0;
  std::vector<double> v;
  for_each_tuple(others, [&](const std::vector<LatticePoint>& pts) {
    v.clear();
    for (const auto& p : pts) v.push_back(to_double(value(p, params)));
    double t = 1.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      t *= std::fabs(v[i]) * (std::fabs(v[i]) + m);
      for (std::size_t j = i + 1; j < v.size(); ++j) t *= std::fabs(v[j] - v[i]);
    }
    sum += t;
  });
  return ts * sum * (1.0 + 1e-12);
}

// X(y) membership.
bool on_side(const Rational& x, const Rational& y) { return y > 0 ? x >= y : x <= y; }

// prod_{x' != x} (x - x') over the nonzero points, times x^{zeros}.
std::vector<Rational> residue_denominators(const std::vector<Rational>& xs, std::size_t zeros) {
  std::vector<Rational> den(xs.size(), Rational(1));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != i) den[i] *= xs[i] - xs[j];
    den[i] *= pow_int(xs[i], static_cast<long>(zeros));
  }
  return den;
}

}  // namespace

Rational link_weight(const Config& x, const Config& y, const QParams& params) {
  if (x.size() != y.size() + 1 || !interlaces(x, y)) return Rational(0);
  const long n = static_cast<long>(y.size());
  return qq_poch(n, params.q()) * abs_prod(y, params) * abs(vandermonde(y, params)) / abs(vandermonde(x, params));
}

DiscreteMeasure<Rational> link_measure(const Config& x, const Rational& min_abs, const QParams& params) {
  if (x.empty()) throw std::invalid_argument("link measure needs a nonempty configuration");
  return telescope<Rational>(x, x.size() - 1, min_abs, params);
}

template <class T>
DiscreteMeasure<T> push_forward(const DiscreteMeasure<T>& m, const Rational& min_abs, const QParams& params) {
  if (m.level < 2) throw std::invalid_argument("push-forward needs level >= 2");
  ValueCache<T> vals(params);
  const T qq = lift<T>(qq_poch(static_cast<long>(m.level) - 1, params.q()));
  std::unordered_map<Config, T, ConfigHash> next;
  next.reserve(m.atoms.size() * 4);
  double tail = m.tail_bound;
  for (const auto& [z, mass] : m.atoms) {
    if (z.size() != m.level) throw std::domain_error("push-forward of configurations with zeros");
    const T c = mass * qq / abs_vandermonde(z, vals);
    auto cand = link_candidates(z, min_abs, params);
    if (cand.straddle >= 0) tail += magnitude(c) * link_tail_factor(z, cand, min_abs, params);
    for_each_tuple(cand.lists, [&](const std::vector<LatticePoint>& pts) {
      auto [it, fresh] = next.try_emplace(Config::from_sorted(pts), c);
      if (!fresh) it->second += c;
    });
  }
  DiscreteMeasure<T> out;
  out.level = m.level - 1;
  out.tail_bound = tail;
  for (auto& [y, w] : next) out.atoms.emplace(y, w * abs_prod_vandermonde(y, vals));
  return out;
}

template DiscreteMeasure<Rational> push_forward<Rational>(const DiscreteMeasure<Rational>&, const Rational&,
                                                          const QParams&);
template DiscreteMeasure<Real> push_forward<Real>(const DiscreteMeasure<Real>&, const Rational&, const QParams&);

template <class T>
DiscreteMeasure<T> telescope(const Config& x, std::size_t k, const Rational& min_abs, const QParams& params) {
  if (k < 1 || k >= x.size()) throw std::invalid_argument("telescope needs 1 <= K < N");
  DiscreteMeasure<T> cur;
  cur.level = x.size();
  cur.atoms.emplace(x, lift<T>(Rational(1)));
  while (cur.level > k) cur = push_forward(cur, min_abs, params);
  return cur;
}

template DiscreteMeasure<Rational> telescope<Rational>(const Config&, std::size_t, const Rational&, const QParams&);
template DiscreteMeasure<Real> telescope<Real>(const Config&, std::size_t, const Rational&, const QParams&);

Rational lambda_closed_n1(const ExtConfig& x, const LatticePoint& y, const QParams& params) {
  const long n = static_cast<long>(x.level());
  if (n == 0) throw std::invalid_argument("empty configuration");
  if (n == 1) return x.nonzero.size() == 1 && x.nonzero[0] == y ? Rational(1) : Rational(0);
  return lambda_closed_nk(x, Config::from_sorted({y}), params);
}

Rational lambda_closed_nk(const ExtConfig& x, const Config& y, const QParams& params) {
  const long n = static_cast<long>(x.level());
  const long k = static_cast<long>(y.size());
  if (k < 1 || k >= n) throw std::invalid_argument("closed form needs 1 <= K < N");
  const Rational& q = params.q();
  auto xs = values(x.nonzero, params);
  auto ys = values(y, params);
  auto den = residue_denominators(xs, x.zero_mult);
  const Rational scale = Rational(1) - pow_int(q, n - k);

  Matrix<Rational> a(k, std::vector<Rational>(k, Rational(0)));
  for (long j = 0; j < k; ++j) {
    const Rational& yj = ys[j];
    for (std::size_t t = 0; t < xs.size(); ++t) {
      const Rational& xv = xs[t];
      if (!on_side(xv, yj)) continue;
      Rational term(1);
      Rational shift = yj;
      for (long s = 1; s <= n - k - 1; ++s) {
        shift *= q;
        term *= xv - shift;
      }
      term /= den[t];
      Rational power(1);
      for (long i = 0; i < k; ++i) {
        a[i][j] += power * term;
        power *= xv;
      }
    }
    for (long i = 0; i < k; ++i) a[i][j] *= (yj > 0 ? scale : Rational(-scale)) * abs(yj);
  }
  return vandermonde<Rational>(ys) * kernel_prefactor(n, k, q) * determinant(std::move(a));
}

Rational kernel_prefactor(long n, long k, const Rational& q) {
  Rational r(1);
  for (long i = 1; i <= k; ++i) r *= qq_poch(n - i, q) / (qq_poch(k - i, q) * qq_poch(n - k, q));
  return r;
}

TruncatedValue<Real> lambda_inf_residue(const Config& x, const Config& y, const QParams& params, double tol) {
  const long k = static_cast<long>(y.size());
  const long n = static_cast<long>(x.size());
  if (k < 1) throw std::invalid_argument("lambda_inf needs K >= 1");
  const Rational& q = params.q();
  auto xs = values(x, params);
  auto ys = values(y, params);
  auto den = residue_denominators(xs, 0);
  const double inner_tol = tol * 1e-3;

  Matrix<Real> a(k, std::vector<Real>(k, Real(0)));
  std::vector<double> col_err(k, 0.0);
  for (long j = 0; j < k; ++j) {
    const Rational& yj = ys[j];
    for (std::size_t t = 0; t < xs.size(); ++t) {
      const Rational& xv = xs[t];
      if (!on_side(xv, yj)) continue;
      auto prod = q_pochhammer_inf(Real(yj * q / xv), q, inner_tol);
      Real base = prod.value / Real(den[t]);
      double err_scale = std::fabs(to_double(Rational(1) / den[t]));
      for (long i = 0; i < k; ++i) {
        Rational p = pow_int(xv, i + 1 - k - 2 + n);
        a[i][j] += base * Real(p);
        col_err[j] += prod.error_bound * err_scale * std::fabs(to_double(p));
      }
    }
    const Real f(abs(yj) * (yj > 0 ? 1 : -1));
    for (long i = 0; i < k; ++i) a[i][j] *= f;
    col_err[j] *= std::fabs(to_double(yj));
  }
  // Hadamard-type bound for the determinant perturbation.
  std::vector<double> col_norm(k, 0.0);
  for (long j = 0; j < k; ++j) {
    double s = 0;
    for (long i = 0; i < k; ++i) s += std::pow(to_double(a[i][j]), 2);
    col_norm[j] = std::sqrt(s) + col_err[j];
  }
  double det_err = 0.0;
  for (long j = 0; j < k; ++j) {
    double t = col_err[j];
    for (long l = 0; l < k; ++l)
      if (l != j) t *= col_norm[l];
    det_err += t;
  }
  Rational pref = vandermonde<Rational>(ys);
  for (long i = 1; i <= k; ++i) pref /= qq_poch(k - i, q);
  Real value = Real(pref) * determinant(std::move(a));
  return {value, det_err * std::fabs(to_double(pref)), 0};
}

LimitTrace lambda_inf(const Config& x, const Config& y, const QParams& params, double tol, long max_level) {
  const long k = static_cast<long>(y.size());
  const long start = std::max<long>(static_cast<long>(x.size()), k) + 1;
  LimitTrace trace;
  std::vector<Rational> seq;
  for (long level = start; level <= max_level; ++level) {
    seq.push_back(lambda_closed_nk(ExtConfig(x, level - x.size()), y, params));
    if (seq.size() >= 2) trace.increments.push_back(magnitude(Rational(seq.back() - seq[seq.size() - 2])));
    const auto s = trace.increments.size();
    if (s >= 2 && trace.increments[s - 1] < tol && trace.increments[s - 2] < tol) {
      trace.value = Real(seq.back());
      trace.final_level = level;
      return trace;
    }
  }
  throw ConvergenceError("Lambda^N_K(X u 0^(N-|X|), Y) did not stabilize");
}

void check_eval_points(const EvalPoints& z) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i].im == 0) throw std::invalid_argument("evaluation points must lie off the real axis");
    for (std::size_t j = i + 1; j < z.size(); ++j)
      if (z[i] == z[j]) throw std::invalid_argument("evaluation points must be pairwise distinct");
  }
}

namespace {

// det[1/(y_i z_j^{-1};q)_M] / (V(y) V(Z^{-1})).
CxRational f_block(const std::vector<Rational>& ys, const EvalPoints& z, long m, const Rational& q) {
  const std::size_t n = ys.size();
  std::vector<CxRational> zinv;
  for (const auto& zj : z) zinv.push_back(zj.inverse());
  Matrix<CxRational> a(n, std::vector<CxRational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = q_pochhammer<CxRational>(CxRational(ys[i]) * zinv[j], q, m).inverse();
  CxRational v_zinv = vandermonde<CxRational>(zinv);
  return determinant(std::move(a)) / (CxRational(vandermonde<Rational>(ys)) * v_zinv);
}

}  // namespace

CxRational eval_f_z(const EvalPoints& z, const Config& y, long n, const QParams& params) {
  return eval_f_az(Config(), z, y, n, params);
}

CxRational eval_f_az(const Config& a, const EvalPoints& z, const Config& y, long n, const QParams& params) {
  check_eval_points(z);
  const long k = static_cast<long>(y.size());
  if (a.size() + z.size() != y.size()) throw std::invalid_argument("need |A| + |Z| = |Y|");
  std::vector<Rational> rest;
  for (const auto& p : y)
    if (!a.contains(p)) rest.push_back(value(p, params));
  if (rest.size() != z.size()) return CxRational(Rational(0));
  Rational cross(1);
  for (const auto& ys : rest)
    for (const auto& ap : a) cross *= ys - value(ap, params);
  return f_block(rest, z, n - k + 1, params.q()) / CxRational(cross);
}

CxRational image_f_az(const ExtConfig& x, const Config& a, const EvalPoints& z, long k, const QParams& params) {
  check_eval_points(z);
  const long n = static_cast<long>(x.level());
  const long m = static_cast<long>(a.size());
  if (m + static_cast<long>(z.size()) != k) throw std::invalid_argument("need |A| + |Z| = K");
  if (k < 1 || k >= n) throw std::invalid_argument("need 1 <= K < N");
  const Rational& q = params.q();
  if (m == k) return CxRational(lambda_closed_nk(x, a, params));
  if (m > 1) throw std::domain_error("closed-form image implemented for |A| <= 1 only");
  auto xs = values(x.nonzero, params);
  CxRational prod(Rational(1));
  for (const auto& zs : z) {
    CxRational zinv = zs.inverse();
    for (const auto& xv : xs) prod *= CxRational(Rational(1)) - CxRational(xv) * zinv;
  }
  CxRational out = CxRational(kernel_prefactor(n, k, q)) / prod;
  if (m == 0) return out;

  const Rational av = value(a[0], params);
  RationalIntegrand<CxRational> g;
  for (const auto& zs : z) {
    g.scale = g.scale / zs;
    g.roots.push_back(zs);
  }
  Rational shift = av;
  for (long s = 1; s <= n - k - 1; ++s) {
    shift *= q;
    g.roots.push_back(CxRational(shift));
  }
  g.poles = xs;
  g.poles.insert(g.poles.end(), x.zero_mult, Rational(0));
  const Rational abscissa = av * (Rational(1) + q) / 2;
  CxRational integral = g.line_integral(abscissa, av > 0 ? Closure::Right : Closure::Left);
  return out * CxRational((Rational(1) - pow_int(q, n - k)) * abs(av)) * integral;
}

namespace {

bool single_sign(const Config& x) { return !(x.has_negative() && x.has_positive()); }

Residual image_residual(const Config& x, std::size_t k, const Rational& min_abs, const QParams& params,
                        const std::function<CxRational(const Config&)>& f, const CxRational& rhs) {
  Residual r;
  if (single_sign(x)) {
    auto mu = telescope<Rational>(x, k, min_abs, params);
    CxRational lhs;
    for (const auto& [y, w] : mu.atoms) lhs += CxRational(w) * f(y);
    r.value = magnitude(lhs - rhs);
    r.exact = true;
    return r;
  }
  auto mu = telescope<Real>(x, k, min_abs, params);
  CxReal lhs;
  double sup = 0;
  for (const auto& [y, w] : mu.atoms) {
    CxReal fy = to_real(f(y));
    sup = std::max(sup, magnitude(fy));
    lhs += CxReal(w) * fy;
  }
  r.value = magnitude(lhs - to_real(rhs));
  r.tail_bound = mu.tail_bound * sup;
  return r;
}

}  // namespace

Residual verify_f_z_image(const Config& x, const EvalPoints& z, const Rational& min_abs, const QParams& params) {
  return verify_f_az_image(x, Config(), z, min_abs, params);
}

Residual verify_f_az_image(const Config& x, const Config& a, const EvalPoints& z, const Rational& min_abs,
                       const QParams& params) {
  const long n = static_cast<long>(x.size());
  const std::size_t k = a.size() + z.size();
  CxRational rhs = image_f_az(ExtConfig(x), a, z, static_cast<long>(k), params);
  return image_residual(
      x, k, min_abs, params, [&](const Config& y) { return eval_f_az(a, z, y, n, params); }, rhs);
}

DiscreteMeasure<Rational> extended_kernel(const ExtConfig& x, std::size_t k, const Rational& min_abs,
                                          const QParams& params) {
  if (k < 1 || k >= x.level()) throw std::invalid_argument("need 1 <= K < N");
  if (!(min_abs > 0)) throw std::invalid_argument("min_abs must be positive");
  // Support window: the smallest segment containing X and 0.
  std::vector<LatticePoint> window;
  if (x.nonzero.has_negative()) {
    auto neg = ray_points_down_to(x.nonzero[0], min_abs, params);
    window.insert(window.end(), neg.begin(), neg.end());
  }
  if (x.nonzero.has_positive()) {
    auto pos = ray_points_down_to(x.nonzero[x.nonzero.size() - 1], min_abs, params);
    window.insert(window.end(), pos.rbegin(), pos.rend());
  }
  DiscreteMeasure<Rational> out;
  out.level = k;
  Rational total(0);
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
    if (depth == k) {
      std::vector<LatticePoint> pts;
      for (auto i : idx) pts.push_back(window[i]);
      Config y = Config::from_sorted(std::move(pts));
      Rational w = lambda_closed_nk(x, y, params);
      if (w != 0) {
        total += w;
        out.atoms.emplace(std::move(y), std::move(w));
      }
      return;
    }
    for (std::size_t i = from; i + (k - depth) <= window.size(); ++i) {
      idx[depth] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 0);
  Rational rest = Rational(1) - total;
  if (rest < 0) throw std::logic_error("extended kernel has negative leftover mass");
  if (rest != 0) out.atoms.emplace(Config(), rest);
  return out;
}

Residual moment_check(const ExtConfig& x, std::size_t k, const Partition& nu, const Rational& min_abs,
                      const QParams& params) {
  if (nu.length() > k) throw std::invalid_argument("partition longer than K");
  const Rational& q = params.q();
  const Rational denom_k = schur_principal(nu, static_cast<long>(k), q);
  const Rational rhs = normalized_schur(nu, x, params);
  Rational radius(0);
  for (const auto& p : x.nonzero) radius = std::max(radius, abs(value(p, params)));
  Residual r;

  if (x.zero_mult == 0) {
    const Config& c = x.nonzero;
    auto normalized = [&](const Config& y) { return schur(nu, ExtConfig(y), params) / denom_k; };
    if (single_sign(c)) {
      auto mu = telescope<Rational>(c, k, min_abs, params);
      Rational lhs(0);
      for (const auto& [y, w] : mu.atoms) lhs += w * normalized(y);
      r.value = magnitude(Rational(lhs - rhs));
      r.exact = true;
      return r;
    }
    auto mu = telescope<Real>(c, k, min_abs, params);
    Real lhs(0);
    for (const auto& [y, w] : mu.atoms) lhs += w * Real(normalized(y));
    r.value = magnitude(Real(lhs - Real(rhs)));
    // |S_nu(Y)| <= S_nu(|y_1|, ..., |y_K|) <= R^{|nu|} S_nu(1^K).
    std::vector<Rational> ones(k, Rational(1));
    double sup = to_double(pow_int(radius, nu.size()) * schur_values<Rational>(nu, ones) / denom_k);
    r.tail_bound = mu.tail_bound * sup;
    return r;
  }

  if (nu.empty()) {
    auto mu = extended_kernel(x, k, min_abs, params);
    r.value = magnitude(Rational(mu.total() - 1));
    r.exact = true;
    return r;
  }
  if (nu.length() != k)
    throw std::domain_error("moment check at X with zeros needs an empty partition or length(nu) = K");
  auto mu = extended_kernel(x, k, min_abs, params);
  Rational lhs(0);
  for (const auto& [y, w] : mu.atoms)
    if (y.size() == k) lhs += w * schur(nu, ExtConfig(y), params) / denom_k;
  r.value = magnitude(Rational(lhs - rhs));
  // S_nu = e_K S_{nu - 1^K}; a Y with a coordinate below min_abs has
  // |S_nu(Y)| <= min_abs R^{|nu|-1} S_{nu-1^K}(1^K).
  std::vector<int> reduced;
  for (int p : nu.parts()) reduced.push_back(p - 1);
  std::vector<Rational> ones(k, Rational(1));
  Rational sup = min_abs * pow_int(std::max(radius, Rational(1)), nu.size() - 1) *
                 schur_values<Rational>(Partition(reduced), ones) / denom_k;
  r.tail_bound = to_double(mu.weight(Config()) * sup);
  return r;
}

TruncatedValue<Real> extreme_mass_bound(const Rational& q, double tol) {
  auto num = q_pochhammer_inf(Real(q), q, tol / 4);
  auto den = q_pochhammer_inf(Real(-1), q, tol / 4);
  Real v = Real(Rational(1) - q) * num.value / den.value;
  double dv = to_double(den.value);
  double err = (1 - to_double(q)) * (num.error_bound / dv + to_double(num.value) * den.error_bound / (dv * (dv - den.error_bound)));
  return {v, err, num.terms + den.terms};
}

Rational extreme_point_mass(const ExtConfig& x, const QParams& params) {
  if (x.nonzero.empty()) throw std::invalid_argument("X = 0^N has no extreme point");
  const LatticePoint& lo = x.nonzero[0];
  const LatticePoint& hi = x.nonzero[x.nonzero.size() - 1];
  const LatticePoint& x0 = abs(value(lo, params)) > abs(value(hi, params)) ? lo : hi;
  return lambda_closed_n1(x, x0, params);
}

Rational orthogonality_residue(const LatticePoint& u, const LatticePoint& y, long n, const QParams& params,
                               Closure closure) {
  if (n < 2) throw std::invalid_argument("needs N >= 2");
  const Rational& q = params.q();
  const Rational yv = value(y, params);
  const Rational uv = value(u, params);
  RationalIntegrand<Rational> g;
  Rational shift = yv;
  for (long k = 1; k <= n - 2; ++k) {
    shift *= q;
    g.roots.push_back(shift);
  }
  Rational pole = uv;
  for (long k = 0; k < n; ++k) {
    g.poles.push_back(pole);
    pole *= q;
  }
  Rational integral = g.line_integral(yv * (Rational(1) + q) / 2, closure);
  return (Rational(1) - pow_int(q, n - 1)) * abs(yv) * integral;
}

}  // namespace qgt
