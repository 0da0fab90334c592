#include "cli.hpp"

#include "qgt/boundary.hpp"
#include "qgt/kernels.hpp"
#include "qgt/sampler.hpp"
#include "qgt/splines.hpp"
#include "qgt/transforms.hpp"
#include "qgt/validate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>

namespace qgt::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string q = "1/2";
  std::string zeta_plus = "1";
  std::string zeta_minus = "-1";
  double tol = 1e-9;
  std::string min_abs = "1/1073741824";
  unsigned precision = kDefaultDigits;
  std::uint64_t seed = 1;
  std::string format = "json";
};

struct Resolved {
  QParams params;
  double tol;
  Rational min_abs;
  unsigned digits;
  std::uint64_t seed;
  bool csv;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Resolved resolve(const RunConfig& rc) {
  if (!(rc.tol > 0)) throw UsageError("--tol must be positive");
  if (rc.precision < 32) throw UsageError("--precision must be at least 32");
  Rational min_abs = parse_rational(rc.min_abs);
  if (!(min_abs > 0)) throw UsageError("--min-abs must be positive");
  set_precision(rc.precision);
  return {QParams(parse_rational(rc.q), parse_rational(rc.zeta_plus), parse_rational(rc.zeta_minus)), rc.tol, min_abs,
          rc.precision, rc.seed, rc.format == "csv"};
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string key(const Config& c) { return "(" + to_code(c) + ")"; }

std::string weight_text(const Rational& w, unsigned) { return to_string(w); }
std::string weight_text(const Real& w, unsigned digits) { return to_string(w, digits); }

template <class T>
void emit_measure(const DiscreteMeasure<T>& mu, const Resolved& r, std::ostream& out) {
  std::string tail = mu.tail_bound == 0.0 ? "0" : fmt_double(mu.tail_bound);
  if (r.csv) {
    out << "config,weight,tail_bound\n";
    for (const auto& [c, w] : mu.atoms) out << '"' << key(c) << "\"," << weight_text(w, r.digits) << ',' << tail << '\n';
    return;
  }
  json j = json::object();
  for (const auto& [c, w] : mu.atoms) j[key(c)] = weight_text(w, r.digits);
  j["tail"] = tail;
  out << j.dump() << '\n';
}

// "+:0=1/2,+:2=1/2" -> a level-1 measure.
DiscreteMeasure<Rational> parse_measure(const std::string& text) {
  DiscreteMeasure<Rational> m;
  m.level = 1;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("measure atoms are written point=weight");
    auto p = parse_point(item.substr(0, eq));
    m.atoms[Config::from_sorted({p})] += parse_rational(item.substr(eq + 1));
  }
  if (m.atoms.empty()) throw UsageError("empty measure");
  return m;
}

// "re,im" with rational parts.
CxRational parse_complex(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("complex numbers are written re,im");
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

long parse_level(const std::string& text) {
  if (text == "inf") return kInfiniteLevel;
  try {
    long n = std::stol(text);
    if (n < 2) throw UsageError("--n must be at least 2 or inf");
    return n;
  } catch (const std::logic_error&) {
    throw UsageError("--n must be an integer or inf");
  }
}

json complex_json(const CxRational& z) { return {{"im", to_string(z.im)}, {"re", to_string(z.re)}}; }
json complex_json(std::complex<double> z) { return {{"im", fmt_double(z.imag())}, {"re", fmt_double(z.real())}}; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Markov kernels on the two-sided q-lattice"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig rc;
  app.add_option("--q", rc.q, "lattice ratio, rational in (0,1)")->capture_default_str();
  app.add_option("--zeta-plus", rc.zeta_plus, "positive anchor")->capture_default_str();
  app.add_option("--zeta-minus", rc.zeta_minus, "negative anchor")->capture_default_str();
  app.add_option("--tol", rc.tol, "tolerance for limits and quadrature")->capture_default_str();
  app.add_option("--min-abs", rc.min_abs, "truncation cutoff near 0")->capture_default_str();
  app.add_option("--precision", rc.precision, "decimal digits for high-precision floats")->capture_default_str();
  app.add_option("--seed", rc.seed, "random seed")->capture_default_str();
  app.add_option("--format", rc.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  std::string x_text, y_text, z_text, measure_text, n_text = "2", level_text = "quick", nu_text = "[]";
  std::size_t k = 1, zeros = 0, k_max = 2, draws = 1;
  int m = -1;
  bool stats = false;

  auto* kernel = app.add_subcommand("kernel", "link kernels and their compositions");
  kernel->require_subcommand(1);
  auto* k_link = kernel->add_subcommand("link", "the link measure Lambda^{N+1}_N(X, .)");
  k_link->add_option("--x", x_text, "configuration X")->required();
  auto* k_compose = kernel->add_subcommand("compose", "the composed kernel Lambda^N_K(X, .)");
  k_compose->add_option("--x", x_text, "configuration X")->required();
  k_compose->add_option("--k", k, "target level")->required();
  auto* k_closed = kernel->add_subcommand("closed", "one entry by the determinantal formula");
  k_closed->add_option("--x", x_text, "nonzero part of X")->required();
  k_closed->add_option("--zeros", zeros, "multiplicity of 0 in X");
  k_closed->add_option("--y", y_text, "target configuration Y")->required();

  auto* spline = app.add_subcommand("spline", "q-B-splines");
  spline->require_subcommand(1);
  auto* s_moments = spline->add_subcommand("moments", "closed-form moments");
  s_moments->add_option("--x", x_text, "nonzero part of X")->required();
  s_moments->add_option("--zeros", zeros, "multiplicity of 0 in X");
  s_moments->add_option("--m", m, "single moment order; omit for orders 0..8");
  auto* s_table = spline->add_subcommand("table", "atom table of B^q_N(X)");
  s_table->add_option("--x", x_text, "nonzero part of X")->required();
  s_table->add_option("--zeros", zeros, "multiplicity of 0 in X");

  auto* transform = app.add_subcommand("transform", "q-Laplace transform pair");
  transform->require_subcommand(1);
  auto* t_fwd = transform->add_subcommand("fwd", "forward transform at z");
  t_fwd->add_option("--measure", measure_text, "atoms as point=weight,...")->required();
  t_fwd->add_option("--z", z_text, "evaluation point re,im")->required();
  t_fwd->add_option("--n", n_text, "level N or inf");
  auto* t_inv = transform->add_subcommand("inv", "numerical inverse of the transform of a measure at y");
  t_inv->add_option("--measure", measure_text, "atoms as point=weight,...")->required();
  t_inv->add_option("--y", y_text, "lattice point")->required();
  t_inv->add_option("--n", n_text, "level N or inf");

  auto* boundary = app.add_subcommand("boundary", "extreme coherent families");
  boundary->require_subcommand(1);
  auto* b_family = boundary->add_subcommand("family", "levels 1..K_max of M^(X)");
  b_family->add_option("--x", x_text, "finite boundary point X")->required();
  b_family->add_option("--k-max", k_max, "highest level")->capture_default_str();
  auto* b_check = boundary->add_subcommand("check", "coherence and moment residuals");
  b_check->add_option("--x", x_text, "finite boundary point X")->required();
  b_check->add_option("--k", k, "level K (needs K+1 materialized)")->capture_default_str();
  b_check->add_option("--nu", nu_text, "partition for the moment residual")->capture_default_str();

  auto* sample = app.add_subcommand("sample", "draws from Lambda^N_K(X, .)");
  sample->add_option("--x", x_text, "configuration X")->required();
  sample->add_option("--k", k, "target level")->required();
  sample->add_option("--draws", draws, "number of chains")->capture_default_str();
  sample->add_flag("--stats", stats, "print empirical frequencies instead of trajectories");

  auto* validate = app.add_subcommand("validate", "run the acceptance suite");
  validate->add_option("--level", level_text, "quick or full")->check(CLI::IsMember({"quick", "full"}));

  // CLI11 reads "-1" or "-:3" after an option as a new flag; glue such values on.
  std::vector<std::string> joined;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) == 0 && a.find('=') == std::string::npos && i + 1 < args.size()) {
      const std::string& v = args[i + 1];
      if (v.size() > 1 && v[0] == '-' && (std::isdigit(static_cast<unsigned char>(v[1])) || v[1] == ':' || v[1] == '.')) {
        joined.push_back(a + "=" + v);
        ++i;
        continue;
      }
    }
    joined.push_back(a);
  }
  std::vector<std::string> reversed(joined.rbegin(), joined.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::optional<Resolved> resolved;
  try {
    resolved = resolve(rc);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const Resolved& r = *resolved;

  auto parse_inputs = [&](auto&& body) -> int {
    try {
      return body();
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitFailure;
    }
  };

  if (*k_link) {
    return parse_inputs([&] {
      auto x = parse_config(x_text);
      if (x.size() < 2) throw UsageError("--x needs at least two points");
      emit_measure(link_measure(x, r.min_abs, r.params), r, out);
      return kExitOk;
    });
  }
  if (*k_compose) {
    return parse_inputs([&] {
      auto x = parse_config(x_text);
      if (k < 1 || k >= x.size()) throw UsageError("--k must satisfy 1 <= K < N");
      if (x.has_negative() && x.has_positive()) emit_measure(telescope<Real>(x, k, r.min_abs, r.params), r, out);
      else emit_measure(telescope<Rational>(x, k, r.min_abs, r.params), r, out);
      return kExitOk;
    });
  }
  if (*k_closed) {
    return parse_inputs([&] {
      ExtConfig x(parse_config(x_text), zeros);
      auto y = parse_config(y_text);
      if (y.empty() || y.size() >= x.level()) throw UsageError("--y must have 1 <= K < N points");
      out << to_string(lambda_closed_nk(x, y, r.params)) << '\n';
      return kExitOk;
    });
  }
  if (*s_moments) {
    return parse_inputs([&] {
      ExtConfig x(parse_config(x_text), zeros);
      if (x.level() < 1) throw UsageError("X must have at least one coordinate");
      if (m >= 0) {
        out << to_string(qbspline_moment(x, m, r.params)) << '\n';
        return kExitOk;
      }
      if (r.csv) {
        out << "m,moment\n";
        for (int i = 0; i <= 8; ++i) out << i << ',' << to_string(qbspline_moment(x, i, r.params)) << '\n';
      } else {
        json j = json::object();
        for (int i = 0; i <= 8; ++i) j[std::to_string(i)] = to_string(qbspline_moment(x, i, r.params));
        out << j.dump() << '\n';
      }
      return kExitOk;
    });
  }
  if (*s_table) {
    return parse_inputs([&] {
      ExtConfig x(parse_config(x_text), zeros);
      if (x.level() < 1) throw UsageError("X must have at least one coordinate");
      emit_measure(qbspline(x, r.min_abs, r.params), r, out);
      return kExitOk;
    });
  }
  if (*t_fwd) {
    return parse_inputs([&] {
      auto mu = parse_measure(measure_text);
      auto z = parse_complex(z_text);
      check_eval_points({z});
      long n = parse_level(n_text);
      json j = n == kInfiniteLevel
                   ? complex_json(qlaplace_numeric(mu, to_complex_double(z), n, r.params, r.tol))
                   : complex_json(qlaplace(mu, z, n, r.params));
      out << j.dump() << '\n';
      return kExitOk;
    });
  }
  if (*t_inv) {
    return parse_inputs([&] {
      auto mu = parse_measure(measure_text);
      auto y = parse_point(y_text);
      long n = parse_level(n_text);
      ComplexFn phi = [&](std::complex<double> z) { return qlaplace_numeric(mu, z, n, r.params, r.tol / 10); };
      auto inv = inv_qlaplace(phi, y, n, r.params, r.tol);
      json j = complex_json(inv.value);
      j["error_estimate"] = fmt_double(inv.error_estimate);
      j["exact"] = to_string(mu.weight(Config::from_sorted({y})));
      out << j.dump() << '\n';
      return kExitOk;
    });
  }
  if (*b_family) {
    return parse_inputs([&] {
      auto x = parse_config(x_text);
      if (k_max < 1) throw UsageError("--k-max must be positive");
      auto fam = extreme_family(x, k_max, r.min_abs, r.params, r.tol);
      if (r.csv) {
        out << "level,config,weight,tail_bound\n";
        for (const auto& [lvl, mu] : fam.levels)
          for (const auto& [c, w] : mu.atoms)
            out << lvl << ",\"" << key(c) << "\"," << to_string(w, r.digits) << ',' << fmt_double(mu.tail_bound)
                << '\n';
      } else {
        json j = json::object();
        for (const auto& [lvl, mu] : fam.levels) {
          json level = json::object();
          for (const auto& [c, w] : mu.atoms) level[key(c)] = to_string(w, r.digits);
          level["tail"] = fmt_double(mu.tail_bound);
          j[std::to_string(lvl)] = level;
        }
        out << j.dump() << '\n';
      }
      return kExitOk;
    });
  }
  if (*b_check) {
    return parse_inputs([&] {
      auto x = parse_config(x_text);
      auto nu = parse_partition(nu_text);
      if (k < 1) throw UsageError("--k must be positive");
      auto mom = boundary_moment_check(x, k, nu, r.min_abs, r.params, r.tol);
      json j = {{"coherence", nullptr},
                {"moment_residual", fmt_double(mom.value)},
                {"moment_tail_bound", fmt_double(mom.tail_bound)}};
      if (k < x.size()) {
        auto fam = extreme_family(x, k + 1, r.min_abs, r.params, r.tol);
        j["coherence"] = fmt_double(coherence_check(fam, k, r.min_abs, r.params));
      }
      out << j.dump() << '\n';
      return kExitOk;
    });
  }
  if (*sample) {
    return parse_inputs([&] {
      auto x = parse_config(x_text);
      if (k < 1 || k >= x.size()) throw UsageError("--k must satisfy 1 <= K < N");
      LinkSampler sampler(r.params);
      RngState rng(r.seed);
      std::map<Config, long> counts;
      for (std::size_t d = 0; d < draws; ++d) {
        auto s = sampler.sample_chain(x, k, rng);
        if (stats) {
          ++counts[s.result];
          continue;
        }
        for (const auto& c : s.trajectory) out << d << '\t' << c.size() << '\t' << to_code(c) << '\n';
      }
      if (stats) {
        DiscreteMeasure<Rational> freq;
        freq.level = k;
        for (const auto& [c, n] : counts) freq.atoms.emplace(c, Rational(n, static_cast<long>(draws)));
        emit_measure(freq, r, out);
      }
      return kExitOk;
    });
  }
  if (*validate) {
    auto level = level_text == "full" ? ValidationLevel::Full : ValidationLevel::Quick;
    bool all = true;
    run_acceptance(level, r.seed, [&](const CriterionResult& c) {
      out << format_result(c) << std::endl;
      all = all && c.passed;
    });
    return all ? kExitOk : kExitFailure;
  }
  err << "error: unknown command\n";
  return kExitUsage;
}

}  // namespace qgt::cli
