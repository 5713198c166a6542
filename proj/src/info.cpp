#include "reserve_lab/info.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "reserve_lab/errors.hpp"
#include "reserve_lab/kernels.hpp"
#include "reserve_lab/numeric.hpp"

namespace reserve_lab::info {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kZ95 = 1.959963984540054;
// Smallest quantile fed to unbounded value maps; squares of v(q) stay finite.
constexpr double kQuantileFloor = 1e-150;

double mass_at(const Distribution& d, double x) {
  for (const Atom& a : d.atoms()) {
    if (a.value == x) return a.mass;
  }
  return 0.0;
}

double density_at(const Distribution& d, double x) { return d.discrete() ? mass_at(d, x) : *d.pdf(x); }

void require_same_kind(const Distribution& d1, const Distribution& d2) {
  if (d1.discrete() != d2.discrete()) {
    throw InfiniteDivergence("support mismatch: one member is discrete and the other continuous");
  }
}

// Integral over q in [0, 1] of g(v1(q)), split where either member has a kink.
// Each piece keeps its evaluation points strictly inside so that one-sided
// densities are read on the correct side of a jump.
double integrate_in_quantiles(const Distribution& d1, const Distribution& d2, const numeric::ScalarFn& g,
                              double tol) {
  std::vector<double> cuts;
  for (const auto* d : {&d1, &d2}) {
    for (double b : d->breakpoints()) cuts.push_back(d1.quantile_of_value(b));
  }
  cuts = numeric::clean_breaks(cuts, 0.0, 1.0);
  cuts.insert(cuts.begin(), 0.0);
  cuts.push_back(1.0);

  const bool bounded = d1.bounded_above();
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    const double inset = 1e-13 * (b - a);
    const auto f = [&](double q) {
      q = std::clamp(q, a + inset, b - inset);
      if (!bounded) q = std::max(q, kQuantileFloor);
      return g(d1.value_at_quantile(q));
    };
    total += numeric::adaptive_simpson(f, a, b, tol * (b - a));
  }
  return total;
}

double sum_over_atoms(const Distribution& d, const std::function<double(const Atom&)>& term) {
  double s = 0.0;
  for (const Atom& a : d.atoms()) s += term(a);
  return s;
}

// Each direction equals (6 eps / H) ln((1 + 3 eps) / (1 - 3 eps)); the sum is twice that.
double general_closed_form(double delta, double eps) {
  return 2.0 * 6.0 * eps * delta * std::log((1.0 + 3.0 * eps) / (1.0 - 3.0 * eps));
}

double regular_closed_form(double eps0) {
  const double a = 1.0 - 2.0 * eps0;
  return 8.0 * eps0 * eps0 * eps0 / (a * a);
}

double mhr_closed_form(double eps0) {
  const double s = std::sqrt(eps0);
  const double band = 2.0 * s / (1.0 - 2.0 * s);
  const double band_prime = 2.0 * eps0 / (1.0 - s);
  return band * band * s + band_prime * band_prime * (1.0 - s);
}

LowerBoundPair assemble(PairKind kind, Distribution d1, Distribution d2, double epsilon, double delta, double eps0,
                        double closed) {
  const double numeric_sum = kl_divergence(d1, d2) + kl_divergence(d2, d1);
  auto set1 = curve::alpha_optimal_prices(d1, 1.0 - 3.0 * epsilon);
  auto set2 = curve::alpha_optimal_prices(d2, 1.0 - 3.0 * epsilon);
  const bool disjoint = set1.disjoint_from(set2);
  return {kind,
          std::move(d1),
          std::move(d2),
          epsilon,
          delta,
          eps0,
          closed,
          numeric_sum,
          (4.0 / 9.0) / numeric_sum,
          (4.0 / 9.0) / closed,
          std::move(set1),
          std::move(set2),
          disjoint};
}

LowerBoundPair build_mhr(double epsilon, double eps0) {
  if (!(eps0 > 0.0 && eps0 < 0.25)) throw ValidationError("mhr pair: eps0 must lie in (0, 1/4)");
  return assemble(PairKind::Mhr, Distribution(MhrLbMember{eps0, 1}), Distribution(MhrLbMember{eps0, 2}), epsilon,
                  0.0, eps0, mhr_closed_form(eps0));
}

[[noreturn]] void band_failure(double v, double ratio) {
  std::ostringstream os;
  os.precision(10);
  os << "hypothesis fails at v=" << v << " (density ratio " << ratio << ")";
  throw HypothesisFailure(os.str());
}

// Values at which the band hypotheses are verified.
std::vector<double> band_grid(const Distribution& d1, const Distribution& d2) {
  std::vector<double> vs;
  for (const auto* d : {&d1, &d2}) {
    if (d->discrete()) {
      for (const Atom& a : d->atoms()) vs.push_back(a.value);
      continue;
    }
    for (int i = 0; i < 4000; ++i) vs.push_back(d->value_at_quantile((i + 0.5) / 4000.0));
    for (double b : d->breakpoints()) {
      const double step = 1e-9 * std::max(1.0, std::abs(b));
      vs.push_back(b - step);
      vs.push_back(b + step);
    }
  }
  return vs;
}

}  // namespace

double log_density_ratio(const Distribution& d1, const Distribution& d2, double x) {
  const double f1 = density_at(d1, x);
  const double f2 = density_at(d2, x);
  if (f1 == f2) return 0.0;
  if (f2 == 0.0) return kInf;
  if (f1 == 0.0) return -kInf;
  return std::log(f1 / f2);
}

double kl_divergence(const Distribution& d1, const Distribution& d2) {
  require_same_kind(d1, d2);
  if (d1.discrete()) {
    return sum_over_atoms(d1, [&](const Atom& a) {
      const double m2 = mass_at(d2, a.value);
      if (m2 == 0.0) throw InfiniteDivergence("infinite divergence: atom missing from the second member");
      return a.mass == m2 ? 0.0 : a.mass * std::log(a.mass / m2);
    });
  }
  if (d1.support_min() < d2.support_min() || d1.support_max() > d2.support_max()) {
    throw InfiniteDivergence("infinite divergence: support of the first member is not covered");
  }
  return integrate_in_quantiles(
      d1, d2,
      [&](double v) {
        const double r = log_density_ratio(d1, d2, v);
        if (!std::isfinite(r)) throw InfiniteDivergence("infinite divergence: zero density under the second member");
        return r;
      },
      1e-13);
}

double statistical_distance(const Distribution& d1, const Distribution& d2) {
  require_same_kind(d1, d2);
  if (d1.discrete()) {
    std::vector<double> values;
    for (const Atom& a : d1.atoms()) values.push_back(a.value);
    for (const Atom& a : d2.atoms()) values.push_back(a.value);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    double s = 0.0;
    for (double v : values) s += std::abs(mass_at(d1, v) - mass_at(d2, v));
    return 0.5 * s;
  }
  // TV = integral of (f1 - f2)^+ = E_1[(1 - f2/f1)^+].
  return integrate_in_quantiles(
      d1, d2,
      [&](double v) {
        const double f1 = *d1.pdf(v);
        const double f2 = *d2.pdf(v);
        if (f1 == f2) return 0.0;
        return std::max(0.0, 1.0 - f2 / f1);
      },
      1e-13);
}

double pinsker_m_samples(double kl_sum, std::size_t m) {
  if (!(kl_sum >= 0.0)) throw ValidationError("pinsker: kl sum must be >= 0");
  if (m < 1) throw ValidationError("pinsker: m must be >= 1");
  return std::min(1.0, 0.5 * std::sqrt(static_cast<double>(m) * kl_sum));
}

std::string_view pair_kind_name(PairKind k) {
  switch (k) {
    case PairKind::General:
      return "general";
    case PairKind::BoundedSupport:
      return "bounded";
    case PairKind::Regular:
      return "regular";
    case PairKind::Mhr:
      return "mhr";
  }
  return "unknown";
}

PairKind pair_kind_from_name(std::string_view name) {
  if (name == "general") return PairKind::General;
  if (name == "bounded") return PairKind::BoundedSupport;
  if (name == "regular") return PairKind::Regular;
  if (name == "mhr") return PairKind::Mhr;
  throw ValidationError("unknown pair kind: " + std::string(name));
}

LowerBoundPair make_lb_pair(PairKind kind, const PairParams& p) {
  if (!(p.epsilon > 0.0 && p.epsilon < 1.0 / 6.0)) throw ValidationError("lb pair: epsilon must lie in (0, 1/6)");
  switch (kind) {
    case PairKind::General:
    case PairKind::BoundedSupport: {
      Distribution d1(GeneralLbMember{p.delta, p.epsilon, 1});
      Distribution d2(GeneralLbMember{p.delta, p.epsilon, 2});
      return assemble(kind, std::move(d1), std::move(d2), p.epsilon, p.delta, 0.0,
                      general_closed_form(p.delta, p.epsilon));
    }
    case PairKind::Regular: {
      const double eps0 = 3.0 * p.epsilon;
      return assemble(kind, Distribution(RegularLbMember{eps0, 1}), Distribution(RegularLbMember{eps0, 2}),
                      p.epsilon, 0.0, eps0, regular_closed_form(eps0));
    }
    case PairKind::Mhr: {
      if (p.eps0) return build_mhr(p.epsilon, *p.eps0);
      const auto c = mhr_pair_constant(p.epsilon);
      if (!c) throw ValidationError("mhr pair: no c in {2, ..., 64} with c*eps < 1/4 separates the price sets");
      return build_mhr(p.epsilon, *c * p.epsilon);
    }
  }
  throw ValidationError("lb pair: unknown kind");
}

std::optional<int> mhr_pair_constant(double epsilon) {
  for (int c = 2; c <= 64; ++c) {
    const double eps0 = c * epsilon;
    if (eps0 >= 0.25) break;
    const Distribution d1(MhrLbMember{eps0, 1});
    const Distribution d2(MhrLbMember{eps0, 2});
    const double alpha = 1.0 - 3.0 * epsilon;
    if (curve::alpha_optimal_prices(d1, alpha).disjoint_from(curve::alpha_optimal_prices(d2, alpha))) return c;
  }
  return std::nullopt;
}

double reduction_bound(const LowerBoundPair& pair) { return (4.0 / 9.0) / pair.kl_sum_numeric; }

double density_ratio_kl_bound(const Distribution& d1, const Distribution& d2, double eps,
                              std::optional<double> eps_prime, std::optional<ValueRange> subset) {
  if (!(eps >= 0.0)) throw ValidationError("density_ratio_kl_bound: eps must be >= 0");
  if (eps_prime && !subset) throw ValidationError("density_ratio_kl_bound: eps_prime needs a subset");
  require_same_kind(d1, d2);

  const auto in_subset = [&](double v) { return subset && v >= subset->lo && v <= subset->hi; };
  constexpr double kSlack = 1e-12;
  for (double v : band_grid(d1, d2)) {
    const double f1 = density_at(d1, v);
    const double f2 = density_at(d2, v);
    if (f1 == 0.0 && f2 == 0.0) continue;
    if (f1 == 0.0 || f2 == 0.0) band_failure(v, f2 == 0.0 ? kInf : 0.0);
    const double ratio = f1 / f2;
    double band = eps;
    if (in_subset(v)) {
      if (!eps_prime) {
        if (std::abs(ratio - 1.0) > kSlack) band_failure(v, ratio);
        continue;
      }
      band = *eps_prime;
    }
    const double top = (1.0 + band) * (1.0 + kSlack);
    if (ratio > top || ratio < 1.0 / top) band_failure(v, ratio);
  }

  double subset_mass = 0.0;
  if (subset) {
    if (d1.discrete()) {
      for (const Atom& a : d1.atoms()) {
        if (in_subset(a.value)) subset_mass += a.mass;
      }
    } else {
      subset_mass = d1.cdf(subset->hi) - d1.cdf(subset->lo);
    }
  }

  double bound = eps * eps;
  if (subset && !eps_prime) {
    bound = eps * eps * (1.0 - subset_mass);
  } else if (subset) {
    bound = eps * eps * (1.0 - subset_mass) + (*eps_prime) * (*eps_prime) * subset_mass;
  }

  const double numeric_sum = kl_divergence(d1, d2) + kl_divergence(d2, d1);
  if (numeric_sum > bound + 1e-6) {
    std::ostringstream os;
    os << "numeric KL sum " << numeric_sum << " exceeds the band bound " << bound;
    throw NumericalAssertion(os.str());
  }
  return bound;
}

ClassifyReport classify_lr(const Distribution& d1, const Distribution& d2, double kl_sum, std::size_t m,
                           std::size_t trials, std::uint64_t seed, int threads) {
  if (m < 1 || trials < 1) throw ValidationError("classify: m and trials must be >= 1");
  std::vector<unsigned char> hits(trials);
  kernels::classify_trials_parallel(d1, d2, m, seed, hits, threads);
  std::size_t wins = 0;
  for (unsigned char h : hits) wins += h;
  const double n = static_cast<double>(trials);
  const double rate = static_cast<double>(wins) / n;
  const double ci = kZ95 * std::sqrt(rate * (1.0 - rate) / n);
  const double cap = (pinsker_m_samples(kl_sum, m) + 1.0) / 2.0;
  return {rate, ci, cap, m, trials, seed, rate <= cap + 3.0 * ci};
}

ClassifyReport classify_lr(const LowerBoundPair& pair, std::size_t m, std::size_t trials, std::uint64_t seed,
                           int threads) {
  return classify_lr(pair.d1, pair.d2, pair.kl_sum_numeric, m, trials, seed, threads);
}

LlrStats llr_under_first(const Distribution& d1, const Distribution& d2, std::size_t m, std::size_t trials,
                         std::uint64_t seed) {
  if (m < 1 || trials < 2) throw ValidationError("llr: need m >= 1 and trials >= 2");
  std::vector<double> sums(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    CounterRng rng(seed, t);
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += log_density_ratio(d1, d2, d1.value_at_quantile(rng.uniform()));
    sums[t] = s;
  }
  const auto mom = kernels::moments(sums);
  return {mom.mean, std::sqrt(mom.variance / static_cast<double>(trials))};
}

}  // namespace reserve_lab::info
