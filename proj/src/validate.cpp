#include "qgt/validate.hpp"

#include "qgt/boundary.hpp"
#include "qgt/kernels.hpp"
#include "qgt/sampler.hpp"
#include "qgt/splines.hpp"
#include "qgt/transforms.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace qgt {

namespace {

using Gen = std::mt19937_64;

enum class SignMode { Positive, Negative, Single, Mixed };

long uniform_int(Gen& gen, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }

// A random configuration of n points with exponents in [lo, hi].
Config random_config(Gen& gen, std::size_t n, SignMode mode, long lo = -1, long hi = 6) {
  if (mode == SignMode::Single) mode = uniform_int(gen, 0, 1) ? SignMode::Positive : SignMode::Negative;
  for (;;) {
    std::vector<LatticePoint> pts;
    while (pts.size() < n) {
      Sign s = mode == SignMode::Positive   ? Sign::Plus
               : mode == SignMode::Negative ? Sign::Minus
                                            : (uniform_int(gen, 0, 1) ? Sign::Plus : Sign::Minus);
      LatticePoint p{s, uniform_int(gen, lo, hi)};
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    Config c(pts);
    if (mode != SignMode::Mixed || (c.has_negative() && c.has_positive())) return c;
  }
}

// A point off the real axis with small rational coordinates.
CxRational random_eval_point(Gen& gen) {
  Rational re(uniform_int(gen, -8, 8), uniform_int(gen, 1, 4));
  Rational im(uniform_int(gen, 1, 12), uniform_int(gen, 1, 4));
  if (uniform_int(gen, 0, 1)) im = -im;
  return {re, im};
}

EvalPoints random_eval_points(Gen& gen, std::size_t k) {
  EvalPoints z;
  while (z.size() < k) {
    auto c = random_eval_point(gen);
    if (std::find(z.begin(), z.end(), c) == z.end()) z.push_back(c);
  }
  return z;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Tally {
  long checks = 0;
  long failures = 0;
  double worst = 0.0;
  std::string first_failure;

  void check(bool ok, const std::string& what, double err = 0.0) {
    ++checks;
    worst = std::max(worst, err);
    if (!ok && failures++ == 0) first_failure = what;
  }
  bool ok() const { return failures == 0 && checks > 0; }
  std::string summary() const {
    std::string s = std::to_string(checks) + " checks, worst " + fmt(worst);
    if (failures) s += ", " + std::to_string(failures) + " failed (first: " + first_failure + ")";
    return s;
  }
};

struct Context {
  ValidationLevel level;
  std::uint64_t seed;
  QParams params = QParams::canonical();

  bool full() const { return level == ValidationLevel::Full; }
  long count(long full_count, long quick_count) const { return full() ? full_count : quick_count; }
  Gen gen(int id) const { return Gen(seed * 1000003ULL + static_cast<std::uint64_t>(id)); }
};

const Rational kMinAbs30 = Rational(1) / Rational(Integer(1) << 30);

// 1. Every link measure is a probability measure.
std::string stochasticity(const Context& ctx, bool& ok) {
  Gen gen = ctx.gen(1);
  Tally single, mixed;
  for (long t = 0; t < ctx.count(500, 60); ++t) {
    auto x = random_config(gen, static_cast<std::size_t>(uniform_int(gen, 2, 6)), SignMode::Single);
    auto mu = link_measure(x, Rational(0), ctx.params);
    single.check(mu.total() == 1 && mu.tail_bound == 0.0, to_code(x));
  }
  for (long t = 0; t < ctx.count(200, 30); ++t) {
    // The cut mass scales like min_abs / |x_s x_{s+1}| for the pair around 0.
    auto x = random_config(gen, static_cast<std::size_t>(uniform_int(gen, 2, 6)), SignMode::Mixed, -1, 3);
    auto mu = link_measure(x, kMinAbs30, ctx.params);
    Rational total = mu.total();
    bool good = total <= 1 && to_double(Rational(1) - total) <= mu.tail_bound && mu.tail_bound <= 1e-8;
    mixed.check(good, to_code(x), mu.tail_bound);
  }
  ok = single.ok() && mixed.ok();
  return "single-sign exact: " + single.summary() + "; mixed tail: " + mixed.summary();
}

// 2. Determinantal closed form against the telescoped composition.
std::string closed_vs_telescope(const Context& ctx, bool& ok) {
  Gen gen = ctx.gen(2);
  Tally exact, mixed;
  for (long t = 0; t < ctx.count(60, 12); ++t) {
    auto n = static_cast<std::size_t>(uniform_int(gen, 2, 6));
    auto x = random_config(gen, n, SignMode::Positive, -1, 5);
    for (std::size_t k = 1; k < n; ++k) {
      auto mu = telescope<Rational>(x, k, Rational(0), ctx.params);
      for (const auto& [y, w] : mu.atoms)
        exact.check(lambda_closed_nk(ExtConfig(x), y, ctx.params) == w, to_code(x) + " -> " + to_code(y));
    }
  }
  for (long t = 0; t < ctx.count(8, 3); ++t) {
    auto n = static_cast<std::size_t>(uniform_int(gen, 2, 4));
    auto x = random_config(gen, n, SignMode::Mixed, -1, 4);
    for (std::size_t k = 1; k < n; ++k) {
      auto mu = telescope<Real>(x, k, kMinAbs30, ctx.params);
      for (const auto& [y, w] : mu.atoms) {
        double err = magnitude(Real(Real(lambda_closed_nk(ExtConfig(x), y, ctx.params)) - w));
        mixed.check(err <= 1e-8, to_code(x) + " -> " + to_code(y), err);
      }
    }
  }
  ok = exact.ok() && mixed.ok();
  return "all-positive exact: " + exact.summary() + "; mixed: " + mixed.summary();
}

// 3. Moment identities for normalized Schur functions.
std::string moments(const Context& ctx, bool& ok) {
  Gen gen = ctx.gen(3);
  Tally exact, mixed;
  for (long t = 0; t < ctx.count(30, 6); ++t) {
    auto n = static_cast<std::size_t>(uniform_int(gen, 2, 5));
    auto x = random_config(gen, n, SignMode::Positive, -1, 5);
    for (std::size_t k = 1; k < n; ++k)
      for (const auto& nu : partitions_up_to(4, k)) {
        auto r = moment_check(ExtConfig(x), k, nu, Rational(0), ctx.params);
        exact.check(r.exact && r.value == 0.0, to_code(x) + " " + to_string(nu), r.value);
      }
  }
  for (long t = 0; t < ctx.count(4, 2); ++t) {
    auto n = static_cast<std::size_t>(uniform_int(gen, 2, 3));
    auto x = random_config(gen, n, SignMode::Mixed, -1, 3);
    for (std::size_t k = 1; k < n; ++k)
      for (const auto& nu : partitions_up_to(4, k)) {
        auto r = moment_check(ExtConfig(x), k, nu, kMinAbs30, ctx.params);
        mixed.check(r.value < 1e-7, to_code(x) + " " + to_string(nu), r.value);
      }
  }
  ok = exact.ok() && mixed.ok();
  return "all-positive exact: " + exact.summary() + "; mixed: " + mixed.summary();
}

// A 20-point window: exponents -2..7 on both rays.
std::vector<LatticePoint> window20() {
  std::vector<LatticePoint> w;
  for (long e = -2; e <= 7; ++e) {
    w.push_back(LatticePoint::plus(e));
    w.push_back(LatticePoint::minus(e));
  }
  return w;
}

DiscreteMeasure<Rational> point_mass(const LatticePoint& u) {
  DiscreteMeasure<Rational> m;
  m.level = 1;
  m.atoms.emplace(Config::from_sorted({u}), Rational(1));
  return m;
}

// 4. Orthogonality of the inverse kernel, by residues and by quadrature.
std::string orthogonality(const Context& ctx, bool& ok) {
  Tally residues, quadrature;
  auto w = window20();
  for (long n = 2; n <= 6; ++n)
    for (const auto& u : w)
      for (const auto& y : w) {
        Rational r = orthogonality_residue(u, y, n, ctx.params, y.positive() ? Closure::Right : Closure::Left);
        residues.check(r == (u == y ? 1 : 0), to_code(u) + "," + to_code(y) + " N=" + std::to_string(n));
      }
  Gen gen = ctx.gen(4);
  const double tol = 1e-7;
  for (long n = 2; n <= 6; ++n)
    for (long t = 0; t < ctx.count(12, 3); ++t) {
      const auto& u = w[static_cast<std::size_t>(uniform_int(gen, 0, 19))];
      const auto& y = t % 3 == 0 ? u : w[static_cast<std::size_t>(uniform_int(gen, 0, 19))];
      auto delta = point_mass(u);
      ComplexFn phi = [&](std::complex<double> z) { return qlaplace_numeric(delta, z, n, ctx.params, tol); };
      auto inv = inv_qlaplace(phi, y, n, ctx.params, tol);
      double err = std::abs(inv.value - std::complex<double>(u == y ? 1.0 : 0.0));
      quadrature.check(err <= 1e-6, to_code(u) + "," + to_code(y) + " N=" + std::to_string(n), err);
    }
  ok = residues.ok() && quadrature.ok();
  return "residues exact: " + residues.summary() + "; quadrature: " + quadrature.summary();
}

// 5. Generating-function identities for f_{Z} and f_{A|Z}.
std::string generating_functions(const Context& ctx, bool& ok) {
  Gen gen = ctx.gen(5);
  Tally exact, mixed;
  for (long t = 0; t < ctx.count(40, 8); ++t) {
    auto n = static_cast<std::size_t>(uniform_int(gen, 2, 6));
    auto x = random_config(gen, n, SignMode::Positive, -1, 5);
    auto k = static_cast<std::size_t>(uniform_int(gen, 1, static_cast<long>(std::min<std::size_t>(3, n - 1))));
    auto r = verify_f_z_image(x, random_eval_points(gen, k), Rational(0), ctx.params);
    exact.check(r.exact && r.value == 0.0, to_code(x) + " K=" + std::to_string(k), r.value);
    // One fixed point, m = 1.
    if (k >= 1 && n >= 3) {
      auto pick = x[static_cast<std::size_t>(uniform_int(gen, 1, static_cast<long>(n) - 1))];
      auto a = Config::from_sorted({pick});
      auto r2 = verify_f_az_image(x, a, random_eval_points(gen, k - 1), Rational(0), ctx.params);
      exact.check(r2.exact && r2.value == 0.0, to_code(x) + " A=" + to_code(a), r2.value);
    }
  }
  for (long t = 0; t < ctx.count(6, 2); ++t) {
    auto n = static_cast<std::size_t>(uniform_int(gen, 2, 3));
    auto x = random_config(gen, n, SignMode::Mixed, -1, 3);
    auto k = static_cast<std::size_t>(uniform_int(gen, 1, static_cast<long>(n) - 1));
    auto r = verify_f_z_image(x, random_eval_points(gen, k), kMinAbs30, ctx.params);
    mixed.check(r.value < 1e-7, to_code(x) + " K=" + std::to_string(k), r.value);
  }
  ok = exact.ok() && mixed.ok();
  return "all-positive exact: " + exact.summary() + "; mixed: " + mixed.summary();
}

GridFunction<Rational> random_polynomial(Gen& gen, int degree) {
  std::vector<Rational> coef;
  for (int i = 0; i <= degree; ++i) coef.emplace_back(uniform_int(gen, -9, 9), uniform_int(gen, 1, 5));
  return [coef](const Rational& t) {
    Rational s(0);
    for (auto it = coef.rbegin(); it != coef.rend(); ++it) s = s * t + *it;
    return s;
  };
}

// 6. q-B-splines: moments, Hermite-Genocchi, the merging limit.
std::string splines(const Context& ctx, bool& ok) {
  Gen gen = ctx.gen(6);
  Tally mom, hg, limit;
  for (long t = 0; t < ctx.count(40, 10); ++t) {
    auto n = static_cast<std::size_t>(uniform_int(gen, 1, 6));
    bool mixed = n >= 2 && t % 4 == 3;
    auto x = random_config(gen, n, mixed ? SignMode::Mixed : SignMode::Single, -1, 5);
    auto spline = qbspline(ExtConfig(x), Rational(1) / Rational(Integer(1) << 40), ctx.params);
    for (int m = 0; m <= 8; ++m) {
      Rational closed = qbspline_moment(ExtConfig(x), m, ctx.params);
      Rational measured = measure_moment(spline, m, ctx.params);
      if (!mixed) {
        mom.check(closed == measured, to_code(x) + " m=" + std::to_string(m));
      } else {
        double err = magnitude(Rational(closed - measured));
        mom.check(err <= 1e-8, to_code(x) + " m=" + std::to_string(m), err);
      }
    }
  }
  for (long t = 0; t < ctx.count(60, 12); ++t) {
    auto n = static_cast<std::size_t>(uniform_int(gen, 1, 6));
    auto x = random_config(gen, n, SignMode::Single, -1, 5);
    auto f = random_polynomial(gen, static_cast<int>(uniform_int(gen, 0, 8)));
    auto knots = values(x, ctx.params);
    Rational dd = divided_difference<Rational>(f, knots);
    auto h = hermite_genocchi<Rational>(f, ExtConfig(x), Rational(0), ctx.params, 1e-12);
    hg.check(h.value == dd, to_code(x));
  }
  // Full merge to 0^N: f[x_1..x_N] -> D_q^{N-1} f(0) / [N-1]_q!.
  GridFunction<Rational> smooth = [](const Rational& t) { return Rational(1) / (Rational(3) - t) + t * t * t; };
  for (std::size_t n = 2; n <= 5; ++n) {
    auto target = hermite_genocchi<Rational>(smooth, ExtConfig(Config(), n), Rational(1, 1 << 20), ctx.params, 1e-14);
    double prev = INFINITY, last = INFINITY;
    bool monotone = true;
    for (long j = 1; j <= 40; ++j) {
      std::vector<Rational> knots;
      for (std::size_t i = 0; i < n; ++i) knots.push_back(pow_int(ctx.params.q(), j + static_cast<long>(i)));
      Rational dd = divided_difference<Rational>(smooth, knots);
      last = magnitude(Rational(dd - target.value)) / std::max(1e-300, magnitude(target.value));
      if (last > prev * (1 + 1e-9) && last > 1e-12) monotone = false;
      prev = last;
    }
    limit.check(monotone && last <= 1e-6, "N=" + std::to_string(n), last);
  }
  ok = mom.ok() && hg.ok() && limit.ok();
  return "moments: " + mom.summary() + "; Hermite-Genocchi: " + hg.summary() + "; merging limit: " + limit.summary();
}

// 7. Universal lower bound for the mass at the extreme point.
std::string extreme_point(const Context& ctx, bool& ok) {
  Gen gen = ctx.gen(7);
  Tally t;
  const auto bound = extreme_mass_bound(ctx.params.q(), 1e-14);
  const double lower = to_double(bound.value) - bound.error_bound;
  double least = INFINITY;
  for (long i = 0; i < ctx.count(1000, 200); ++i) {
    auto n = static_cast<std::size_t>(uniform_int(gen, 1, 8));
    auto zeros = static_cast<std::size_t>(uniform_int(gen, 0, static_cast<long>(n) - 1));
    bool mixed = n - zeros >= 2 && uniform_int(gen, 0, 2) == 0;
    auto x = random_config(gen, n - zeros, mixed ? SignMode::Mixed : SignMode::Single, -2, 7);
    if (x.size() < 2 && zeros == 0) {
      t.check(true, "");
      continue;
    }
    double mass = to_double(extreme_point_mass(ExtConfig(x, zeros), ctx.params));
    least = std::min(least, mass);
    t.check(mass >= lower, to_code(x) + " zeros=" + std::to_string(zeros));
  }
  ok = t.ok();
  return t.summary() + "; bound " + fmt(to_double(bound.value)) + ", least mass " + fmt(least);
}

// 8. Boundary kernels: Euler identity, coherence, boundary moments.
std::string boundary(const Context& ctx, bool& ok) {
  Tally euler, coherence, mom;
  const Config one = Config::from_sorted({LatticePoint::plus(0)});
  const double q = to_double(ctx.params.q());
  double total = 0.0;
  for (long n = 0; n < 80; ++n) {
    auto v = lambda_inf_residue(one, Config::from_sorted({LatticePoint::plus(n)}), ctx.params, 1e-14);
    // q^n (q^{n+1}; q)_inf in doubles.
    double expect = std::pow(q, static_cast<double>(n));
    for (long i = n + 1; i < 400; ++i) expect *= 1 - std::pow(q, static_cast<double>(i));
    double err = std::fabs(to_double(v.value) - expect);
    euler.check(err <= 1e-8, "n=" + std::to_string(n), err);
    total += to_double(v.value);
  }
  euler.check(std::fabs(total - 1.0) <= 1e-8, "total mass", std::fabs(total - 1.0));

  Gen gen = ctx.gen(8);
  const Rational fine = Rational(1) / Rational(Integer(1) << 28);
  for (long t = 0; t < ctx.count(20, 4); ++t) {
    bool mixed = t % 4 == 3;
    auto x = random_config(gen, static_cast<std::size_t>(uniform_int(gen, 2, 4)),
                           mixed ? SignMode::Mixed : SignMode::Single, -1, 4);
    // Levels above |X| carry mass on configurations with zeros, which is only lumped.
    std::size_t kmax = std::min<std::size_t>(mixed ? 3 : 4, x.size());
    auto fam = extreme_family(x, kmax, fine, ctx.params, 1e-12);
    for (std::size_t k = 1; k < kmax; ++k) {
      double r = coherence_check(fam, k, fine, ctx.params);
      coherence.check(r < 1e-7, to_code(x) + " K=" + std::to_string(k), r);
    }
    const std::size_t kmom = std::min<std::size_t>(3, x.size());
    for (std::size_t k = 1; k <= std::min<std::size_t>(kmom, mixed ? 2 : 3); ++k)
      for (const auto& nu : partitions_up_to(3, k)) {
        auto r = boundary_moment_check(x, k, nu, kMinAbs30, ctx.params, 1e-12);
        mom.check(r.value < 1e-7, to_code(x) + " " + to_string(nu) + " K=" + std::to_string(k), r.value);
      }
  }
  ok = euler.ok() && coherence.ok() && mom.ok();
  return "Euler: " + euler.summary() + "; coherence: " + coherence.summary() + "; moments: " + mom.summary();
}

// 9. q-Laplace round trip and contour independence.
std::string laplace(const Context& ctx, bool& ok) {
  Gen gen = ctx.gen(9);
  Tally trip, contour;
  std::vector<LatticePoint> window;
  for (long e = 0; e < 8; ++e) {
    window.push_back(LatticePoint::plus(e));
    window.push_back(LatticePoint::minus(e));
  }
  const double tol = 1e-7;
  for (long t = 0; t < ctx.count(8, 2); ++t) {
    DiscreteMeasure<Rational> m;
    m.level = 1;
    auto atoms = uniform_int(gen, 1, 4);
    Rational left(1);
    for (long a = 0; a < atoms; ++a) {
      const auto& p = window[static_cast<std::size_t>(uniform_int(gen, 0, 15))];
      Rational w = a + 1 == atoms ? left : left * Rational(uniform_int(gen, 1, 9), 10);
      left -= w;
      m.atoms[Config::from_sorted({p})] += w;
    }
    for (long n : {2L, 3L, 5L, kInfiniteLevel}) {
      ComplexFn phi = [&](std::complex<double> z) { return qlaplace_numeric(m, z, n, ctx.params, tol); };
      for (const auto& y : window) {
        double expect = to_double(m.weight(Config::from_sorted({y})));
        auto inv = inv_qlaplace(phi, y, n, ctx.params, tol);
        double err = std::abs(inv.value - std::complex<double>(expect));
        trip.check(err <= 1e-6, to_code(y) + " N=" + std::to_string(n), err);
      }
      // Move the abscissa inside the gap and double R.
      const auto& y = window[static_cast<std::size_t>(uniform_int(gen, 0, 15))];
      auto base = inv_qlaplace(phi, y, n, ctx.params, tol);
      Contour c = default_contour(y, ctx.params);
      const double yv = to_double(value(y, ctx.params));
      c.abscissa = yv * (to_double(ctx.params.q()) + 0.3 * (1 - to_double(ctx.params.q())));
      c.half_height = 2 * base.half_height;
      auto moved = inv_qlaplace(phi, y, n, ctx.params, tol, c);
      double d = std::abs(moved.value - base.value);
      contour.check(d <= 2 * 1e-6, to_code(y) + " N=" + std::to_string(n), d);
    }
  }
  ok = trip.ok() && contour.ok();
  return "round trip: " + trip.summary() + "; contour shift: " + contour.summary();
}

// 10. Sampling against exact atom tables and moment identities.
std::string sampling(const Context& ctx, bool& ok) {
  Tally chi, zs;
  const long draws = ctx.count(30000, 6000);
  auto chi_case = [&](const Config& x, std::size_t k, std::uint64_t stream) {
    DiscreteMeasure<Rational> exact = x.has_negative() && x.has_positive()
                                          ? telescope<Rational>(x, k, kMinAbs30, ctx.params)
                                          : telescope<Rational>(x, k, Rational(0), ctx.params);
    LinkSampler sampler(ctx.params);
    RngState rng(ctx.seed, stream);
    std::map<Config, long> counts;
    for (long i = 0; i < draws; ++i) ++counts[sampler.sample_chain(x, k, rng).result];
    auto r = chi_square_test(counts, exact, draws);
    chi.check(r.p_value > 0.001, to_code(x) + " K=" + std::to_string(k) + " p=" + fmt(r.p_value), r.statistic);
  };
  chi_case(Config::from_sorted({LatticePoint::plus(2), LatticePoint::plus(0)}), 1, 1);
  chi_case(Config::from_sorted({LatticePoint::plus(3), LatticePoint::plus(2), LatticePoint::plus(0)}), 1, 2);
  chi_case(Config::from_sorted({LatticePoint::plus(4), LatticePoint::plus(3), LatticePoint::plus(1),
                                LatticePoint::plus(0)}),
           2, 3);
  chi_case(Config::from_sorted({LatticePoint::minus(0), LatticePoint::plus(0)}), 1, 4);

  const long n = ctx.count(100000, 20000);
  auto z_case = [&](const Config& x, std::size_t k, const Partition& nu, std::uint64_t seed) {
    auto t = empirical_moment_test(x, k, nu, n, ctx.seed + seed, ctx.params);
    zs.check(std::fabs(t.z) < 4, to_code(x) + " " + to_string(nu) + " z=" + fmt(t.z), std::fabs(t.z));
  };
  const Config x3 = Config::from_sorted({LatticePoint::plus(3), LatticePoint::plus(2), LatticePoint::plus(0)});
  z_case(x3, 2, Partition({1}), 11);
  z_case(x3, 1, Partition({2}), 12);
  z_case(Config::from_sorted({LatticePoint::minus(0), LatticePoint::plus(0)}), 1, Partition({1}), 13);
  z_case(Config::from_sorted({LatticePoint::minus(0), LatticePoint::plus(1), LatticePoint::plus(0)}), 2,
         Partition({1, 1}), 14);
  ok = chi.ok() && zs.ok();
  return "chi-square (stat): " + chi.summary() + "; |z|: " + zs.summary() + "; no interlacing violations";
}

// 11. Feller probes: decay at infinity and continuity at merging points.
std::string feller(const Context& ctx, bool& ok) {
  Tally decay, cont;
  const EvalPoints z1{CxRational(Rational(0), Rational(1, 4))};
  const EvalPoints z2{CxRational(Rational(1, 3), Rational(1, 4)), CxRational(Rational(-1, 2), Rational(-1, 3))};
  struct Probe {
    Config a;
    EvalPoints z;
  };
  const std::vector<Probe> probes{{Config(), z1}, {Config(), z2},
                                  {Config::from_sorted({LatticePoint::plus(2)}), z1}};
  // Bodies: a fixed configuration whose top point runs off to infinity.
  const std::vector<Config> bodies{
      Config::from_sorted({LatticePoint::plus(3), LatticePoint::plus(2), LatticePoint::plus(1)}),
      Config::from_sorted({LatticePoint::minus(1), LatticePoint::plus(3), LatticePoint::plus(2)})};
  for (const auto& body : bodies)
    for (const auto& pr : probes) {
      const long k = static_cast<long>(pr.a.size() + pr.z.size());
      double prev = INFINITY, last = INFINITY;
      bool monotone = true;
      for (long j = 1; j <= 12; ++j) {
        std::vector<LatticePoint> pts(body.begin(), body.end());
        pts.push_back(LatticePoint::plus(-j));
        ExtConfig x{Config(pts)};
        if (k >= static_cast<long>(x.level())) continue;
        last = magnitude(image_f_az(x, pr.a, pr.z, k, ctx.params));
        if (last > prev) monotone = false;
        prev = last;
      }
      decay.check(monotone && last < 1e-4, to_code(body) + " A=" + to_code(pr.a), last);
    }
  // Merging: X° with extra points zeta_+ q^j, zeta_+ q^{j+1} -> X° u 0^2.
  const std::vector<Config> heads{Config::from_sorted({LatticePoint::plus(1), LatticePoint::plus(0)}),
                                  Config::from_sorted({LatticePoint::minus(0), LatticePoint::plus(1)})};
  for (const auto& head : heads)
    for (const auto& pr : probes) {
      const long k = static_cast<long>(pr.a.size() + pr.z.size());
      CxRational limit = image_f_az(ExtConfig(head, 2), pr.a, pr.z, k, ctx.params);
      double last = INFINITY;
      for (long j = 4; j <= 30; ++j) {
        std::vector<LatticePoint> pts(head.begin(), head.end());
        pts.push_back(LatticePoint::plus(j));
        pts.push_back(LatticePoint::plus(j + 1));
        last = magnitude(image_f_az(ExtConfig(Config(pts)), pr.a, pr.z, k, ctx.params) - limit);
      }
      cont.check(last < 1e-6, to_code(head) + " A=" + to_code(pr.a), last);
    }
  ok = decay.ok() && cont.ok();
  return "decay at j=12: " + decay.summary() + "; merging continuity: " + cont.summary();
}

struct Criterion {
  int id;
  const char* name;
  std::string (*run)(const Context&, bool&);
};

const Criterion kCriteria[] = {
    {1, "link stochasticity", stochasticity},
    {2, "closed form vs telescope", closed_vs_telescope},
    {3, "moment identities", moments},
    {4, "orthogonality", orthogonality},
    {5, "generating functions", generating_functions},
    {6, "q-B-splines", splines},
    {7, "extreme point bound", extreme_point},
    {8, "boundary families", boundary},
    {9, "q-Laplace round trip", laplace},
    {10, "sampling", sampling},
    {11, "Feller probes", feller},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(ValidationLevel level, std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& on_result, int only) {
  Context ctx{level, seed};
  std::vector<CriterionResult> out;
  for (const auto& c : kCriteria) {
    if (only && c.id != only) continue;
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    auto start = std::chrono::steady_clock::now();
    try {
      bool ok = false;
      r.detail = c.run(ctx, ok);
      r.passed = ok;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.1fs", r.seconds);
  os << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << secs << "): " << r.detail;
  return os.str();
}

}  // namespace qgt
