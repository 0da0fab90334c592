#include "qgt/sampler.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qgt {

namespace {

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

const Rational& two_pow_64() {
  static const Rational v(Integer(1) << 64);
  return v;
}

// Below this the remaining mass of a link measure cannot matter.
const Rational& negligible_tail() {
  static const Rational v(Rational(1) / (Integer(1) << 64));
  return v;
}

}  // namespace

std::uint64_t RngState::next() {
  std::uint64_t k = counter_++;
  return splitmix(splitmix(seed_ ^ splitmix(stream_)) + k * 0xd1342543de82ef95ULL);
}

Rational RngState::uniform_rational() { return Rational(Integer(next())) / two_pow_64(); }

double RngState::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

LinkSampler::LinkSampler(QParams params, Rational initial_min_abs)
    : params_(std::move(params)), initial_min_abs_(std::move(initial_min_abs)) {}

void LinkSampler::deepen(const Config& x, Ladder& ladder) {
  const bool fresh = ladder.atoms.empty();
  if (!fresh) ladder.min_abs /= Rational(1 << 16);
  auto mu = link_measure(x, ladder.min_abs, params_);
  std::vector<std::pair<Config, Rational>> added;
  for (auto& [c, w] : mu.atoms) {
    if (!fresh && std::binary_search(ladder.atoms.begin(), ladder.atoms.end(), c)) continue;
    added.emplace_back(c, w);
  }
  // Old atoms keep their slots; new ones go after them by decreasing weight.
  std::stable_sort(added.begin(), added.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  Rational acc = ladder.cumulative.empty() ? Rational(0) : ladder.cumulative.back();
  for (auto& [c, w] : added) {
    acc += w;
    ladder.atoms.push_back(c);
    ladder.cumulative.push_back(acc);
  }
  ladder.complete = mu.tail_bound == 0.0 || Rational(mu.tail_bound) < negligible_tail();
}

Config LinkSampler::sample_link(const Config& x, RngState& rng) {
  if (x.size() < 2) throw std::invalid_argument("sampling a link needs |X| >= 2");
  auto [it, inserted] = cache_.try_emplace(x);
  Ladder& ladder = it->second;
  if (inserted) {
    ladder.min_abs = initial_min_abs_;
    deepen(x, ladder);
  }
  const Rational u = rng.uniform_rational();
  while (!(u < ladder.cumulative.back()) && !ladder.complete) deepen(x, ladder);
  auto pos = std::upper_bound(ladder.cumulative.begin(), ladder.cumulative.end(), u);
  if (pos == ladder.cumulative.end()) --pos;  // u inside a mass below 2^-64
  return ladder.atoms[static_cast<std::size_t>(pos - ladder.cumulative.begin())];
}

ChainSample LinkSampler::sample_chain(const Config& x, std::size_t k, RngState& rng) {
  if (k < 1 || k >= x.size()) throw std::invalid_argument("chain needs 1 <= K < N");
  ChainSample out;
  out.trajectory.push_back(x);
  Config cur = x;
  while (cur.size() > k) {
    Config next = sample_link(cur, rng);
    if (!interlaces(cur, next)) throw std::logic_error("sampled configuration does not interlace");
    out.trajectory.push_back(next);
    cur = std::move(next);
  }
  out.result = cur;
  return out;
}

MomentTest empirical_moment_test(const Config& x, std::size_t k, const Partition& nu, long n_samples,
                                 std::uint64_t seed, const QParams& params) {
  if (nu.length() > k) throw std::invalid_argument("partition longer than K");
  if (n_samples < 2) throw std::invalid_argument("need at least two samples");
  LinkSampler sampler(params);
  RngState rng(seed);
  const Rational denom = schur_principal(nu, static_cast<long>(k), params.q());
  std::unordered_map<Config, double, ConfigHash> stat_cache;
  double sum = 0.0, sum_sq = 0.0;
  for (long s = 0; s < n_samples; ++s) {
    Config y = sampler.sample_chain(x, k, rng).result;
    auto [it, fresh] = stat_cache.try_emplace(y, 0.0);
    if (fresh) it->second = to_double(schur(nu, ExtConfig(y), params) / denom);
    sum += it->second;
    sum_sq += it->second * it->second;
  }
  MomentTest t;
  t.samples = n_samples;
  t.mean = sum / static_cast<double>(n_samples);
  t.target = to_double(normalized_schur(nu, ExtConfig(x), params));
  double var = std::max(0.0, (sum_sq - sum * t.mean) / static_cast<double>(n_samples - 1));
  t.std_error = std::sqrt(var / static_cast<double>(n_samples));
  double diff = t.mean - t.target;
  if (t.std_error > 0) t.z = diff / t.std_error;
  else t.z = std::fabs(diff) < 1e-12 ? 0.0 : INFINITY;
  return t;
}

ChiSquare chi_square_test(const std::map<Config, long>& counts, const DiscreteMeasure<Rational>& exact, long n) {
  ChiSquare out;
  double pooled_expected = 0.0;
  long pooled_observed = 0;
  long cells = 0;
  long seen = 0;
  for (const auto& [c, w] : exact.atoms) {
    double expected = to_double(w) * static_cast<double>(n);
    auto it = counts.find(c);
    long observed = it == counts.end() ? 0 : it->second;
    seen += observed;
    if (expected < 5.0) {
      pooled_expected += expected;
      pooled_observed += observed;
      continue;
    }
    out.statistic += std::pow(static_cast<double>(observed) - expected, 2) / expected;
    ++cells;
  }
  // Draws outside the table belong to the unlisted remainder.
  pooled_observed += n - seen;
  pooled_expected += std::max(0.0, static_cast<double>(n) - [&] {
    double s = 0;
    for (const auto& [c, w] : exact.atoms) s += to_double(w) * static_cast<double>(n);
    return s;
  }());
  if (pooled_expected > 0) {
    out.statistic += std::pow(static_cast<double>(pooled_observed) - pooled_expected, 2) / pooled_expected;
    ++cells;
  } else if (pooled_observed > 0) {
    out.statistic = INFINITY;
  }
  out.dof = std::max<long>(cells - 1, 1);
  if (std::isfinite(out.statistic)) {
    boost::math::chi_squared dist(static_cast<double>(out.dof));
    out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
  } else {
    out.p_value = 0.0;
  }
  return out;
}

}  // namespace qgt
