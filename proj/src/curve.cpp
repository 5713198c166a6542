#include "reserve_lab/curve.hpp"

#include <algorithm>
#include <cmath>

#include "reserve_lab/errors.hpp"
#include "reserve_lab/numeric.hpp"

namespace reserve_lab::curve {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kGridPoints = 10000;
constexpr double kLogFloor = 1e-15;
constexpr int kLogPoints = 220;

std::vector<double> breakpoint_quantiles(const Distribution& d, double lo) {
  std::vector<double> out;
  if (d.discrete()) return out;
  for (double b : d.breakpoints()) {
    const double q = d.quantile_of_value(b);
    if (q > lo && q < 1.0) out.push_back(q);
  }
  return out;
}

// Quantile grid covering (0, 1]: uniform cells, breakpoint quantiles, and
// either q = 0 (bounded support) or a log-spaced tail down to kLogFloor.
std::vector<double> full_grid(const Distribution& d) {
  std::vector<double> qs;
  qs.reserve(kGridPoints + kLogPoints + 8);
  for (int i = 1; i <= kGridPoints; ++i) qs.push_back(static_cast<double>(i) / kGridPoints);
  if (d.bounded_above()) {
    qs.push_back(0.0);
  } else {
    const double top = std::log(1.0 / kGridPoints);
    const double bottom = std::log(kLogFloor);
    for (int i = 0; i < kLogPoints; ++i) qs.push_back(std::exp(bottom + (top - bottom) * i / kLogPoints));
  }
  for (double q : breakpoint_quantiles(d, 0.0)) qs.push_back(q);
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  return qs;
}

std::vector<double> restricted_grid(const Distribution& d, double delta) {
  std::vector<double> qs;
  qs.reserve(kGridPoints + 8);
  for (int i = 0; i <= kGridPoints; ++i) qs.push_back(delta + (1.0 - delta) * i / kGridPoints);
  qs.back() = 1.0;
  for (double q : breakpoint_quantiles(d, delta)) qs.push_back(q);
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  return qs;
}

struct Peak {
  double q;
  double r;
  std::size_t index;
};

// Golden section only resolves a smooth maximum to about sqrt(machine epsilon)
// in q. Bisecting on the sign of a symmetric difference gets far closer. Peaks
// within reach of a density breakpoint are left alone.
void polish_smooth_peak(const Distribution& d, Peak& peak) {
  constexpr double kSpan = 1e-7;
  constexpr double kStep = 1e-6;
  const double lo = peak.q - kSpan;
  const double hi = peak.q + kSpan;
  if (lo - kStep <= 0.0 || hi + kStep >= 1.0) return;
  for (double b : breakpoint_quantiles(d, 0.0))
    if (std::abs(b - peak.q) < 1e-4) return;
  const auto slope = [&](double q) { return revenue_at_quantile(d, q + kStep) - revenue_at_quantile(d, q - kStep); };
  if (!(slope(lo) > 0.0 && slope(hi) < 0.0)) return;
  const double q = numeric::bisect_boundary(slope, lo, hi, 1e-13);
  const double r = revenue_at_quantile(d, q);
  if (r >= peak.r - 1e-15 * std::abs(peak.r)) {
    peak.q = q;
    peak.r = r;
  }
}

Peak maximize_on_grid(const Distribution& d, const std::vector<double>& qs) {
  std::size_t best = 0;
  double best_r = -kInf;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const double r = revenue_at_quantile(d, qs[i]);
    if (r > best_r) {
      best_r = r;
      best = i;
    }
  }
  Peak peak{qs[best], best_r, best};
  const double a = qs[best == 0 ? 0 : best - 1];
  const double b = qs[std::min(best + 1, qs.size() - 1)];
  if (b > a) {
    const auto refined = numeric::golden_section_max([&](double q) { return revenue_at_quantile(d, q); }, a, b,
                                                     std::min(1e-10, (b - a) * 1e-6));
    if (refined.value > peak.r) {
      peak.q = refined.x;
      peak.r = refined.value;
    }
  }
  polish_smooth_peak(d, peak);
  return peak;
}

double discrete_sale_at(const std::vector<Atom>& atoms, std::size_t k) {
  double s = 0.0;
  for (std::size_t j = atoms.size(); j-- > k;) s += atoms[j].mass;
  return std::min(s, 1.0);
}

}  // namespace

// ---------------------------------------------------------------------------

PriceIntervalSet::PriceIntervalSet(std::vector<PriceInterval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const PriceInterval& x, const PriceInterval& y) { return x.lo < y.lo; });
  for (const PriceInterval& iv : intervals) {
    if (iv.lo > iv.hi) continue;
    if (!intervals_.empty() && iv.lo <= intervals_.back().hi) {
      intervals_.back().hi = std::max(intervals_.back().hi, iv.hi);
    } else {
      intervals_.push_back(iv);
    }
  }
}

bool PriceIntervalSet::contains(double p) const {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [p](const PriceInterval& iv) { return p >= iv.lo && p <= iv.hi; });
}

PriceIntervalSet PriceIntervalSet::intersect(const PriceIntervalSet& other) const {
  std::vector<PriceInterval> out;
  for (const PriceInterval& x : intervals_) {
    for (const PriceInterval& y : other.intervals_) {
      const double lo = std::max(x.lo, y.lo);
      const double hi = std::min(x.hi, y.hi);
      if (lo <= hi) out.push_back({lo, hi});
    }
  }
  return PriceIntervalSet(std::move(out));
}

bool PriceIntervalSet::subset_of(const PriceIntervalSet& other, double slack) const {
  return std::all_of(intervals_.begin(), intervals_.end(), [&](const PriceInterval& x) {
    return std::any_of(other.intervals_.begin(), other.intervals_.end(), [&](const PriceInterval& y) {
      return x.lo >= y.lo - slack && x.hi <= y.hi + slack;
    });
  });
}

// ---------------------------------------------------------------------------

double revenue_at_quantile(const Distribution& d, double q) {
  if (q == 0.0) {
    d.value_at_quantile(0.0);  // throws for unbounded supports
    return 0.0;
  }
  return q * d.value_at_quantile(q);
}

RevenueSummary monopoly(const Distribution& d) {
  if (d.discrete()) {
    const auto atoms = d.atoms();
    RevenueSummary best{0.0, 0.0, -kInf, true};
    // Highest atom first so ties keep the larger price.
    for (std::size_t k = atoms.size(); k-- > 0;) {
      const double s = discrete_sale_at(atoms, k);
      const double r = atoms[k].value * s;
      if (r > best.r_star) best = {s, atoms[k].value, r, true};
    }
    return best;
  }
  const auto qs = full_grid(d);
  const Peak peak = maximize_on_grid(d, qs);
  if (!d.bounded_above() && peak.index == 0) {
    return {0.0, kInf, revenue_at_quantile(d, qs.front()), false};
  }
  return {peak.q, d.value_at_quantile(peak.q), peak.r, true};
}

double restricted_optimal(const Distribution& d, double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) throw ValidationError("restricted_optimal: delta must lie in (0, 1]");
  if (d.discrete()) {
    const auto atoms = d.atoms();
    double best = 0.0;
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      const double s = discrete_sale_at(atoms, k);
      if (s >= delta) best = std::max(best, atoms[k].value * s);
    }
    return best;
  }
  if (delta == 1.0) return revenue_at_quantile(d, 1.0);
  return maximize_on_grid(d, restricted_grid(d, delta)).r;
}

double virtual_value(const Distribution& d, double v) {
  if (d.discrete()) throw NoDensity("virtual_value: discrete distribution has no density");
  const auto bps = d.breakpoints();
  if (std::find(bps.begin(), bps.end(), v) != bps.end()) {
    throw NoDensity("virtual_value: density breakpoint");
  }
  const double f = *d.pdf(v);
  if (!(f > 0.0)) throw NoDensity("virtual_value: zero density");
  return v - (1.0 - d.cdf(v)) / f;
}

double ClassSpec::threshold() const {
  switch (kind) {
    case ClassKind::Regular:
      return 0.0;
    case ClassKind::Mhr:
      return 1.0;
    case ClassKind::StronglyRegular:
      return alpha;
  }
  return 0.0;
}

ClassReport class_check(const Distribution& d, ClassSpec spec) {
  if (d.discrete()) throw NoDensity("class_check: discrete distribution has no density");
  const double threshold = spec.threshold();
  const auto bps = d.breakpoints();
  const double lo = d.support_min();
  const double hi = d.support_max();

  ClassReport report{true, kInf, 0.0, {}};
  for (int i = 0; i < 1000; ++i) {
    const double v = d.value_at_quantile((i + 0.5) / 1000.0);
    const double h = 1e-5 * std::max(1.0, std::abs(v));
    if (v - h <= lo || v + h >= hi) continue;
    const bool near_break =
        std::any_of(bps.begin(), bps.end(), [&](double b) { return std::abs(b - v) <= 2.0 * h; });
    if (near_break) continue;
    const double slope = (virtual_value(d, v + h) - virtual_value(d, v - h)) / (2.0 * h);
    const double margin = slope - threshold;
    if (margin < report.worst_margin) {
      report.worst_margin = margin;
      report.worst_point = v;
    }
  }
  report.pass = report.worst_margin >= -1e-6;

  for (double b : bps) {
    const double s = 1.0 - d.cdf(b);
    if (!(s > 0.0)) continue;
    const double step = 1e-9 * std::max(1.0, std::abs(b));
    report.hazard_jumps.push_back({b, *d.pdf(b - step) / s, *d.pdf(b + step) / s});
  }
  return report;
}

PriceIntervalSet alpha_optimal_prices(const Distribution& d, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("alpha_optimal_prices: alpha must lie in (0, 1)");
  const double target = alpha * monopoly(d).r_star;

  if (d.discrete()) {
    // Prices in (a_{k-1}, a_k] sell with probability S(a_k).
    const auto atoms = d.atoms();
    std::vector<PriceInterval> out;
    double prev = 0.0;
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      const double s = discrete_sale_at(atoms, k);
      const double lo = std::max(prev, target / s);
      if (lo <= atoms[k].value) out.push_back({lo, atoms[k].value});
      prev = atoms[k].value;
    }
    return PriceIntervalSet(std::move(out));
  }

  const auto qs = full_grid(d);
  const auto gap = [&](double q) { return revenue_at_quantile(d, q) - target; };
  std::vector<char> inside(qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i) inside[i] = gap(qs[i]) >= 0.0;

  std::vector<PriceInterval> out;
  std::size_t i = 0;
  while (i < qs.size()) {
    if (!inside[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < qs.size() && inside[j + 1]) ++j;

    // Small quantiles are high prices.
    double price_hi;
    if (i == 0) {
      price_hi = d.bounded_above() ? d.support_max() : kInf;
    } else {
      price_hi = d.value_at_quantile(numeric::bisect_boundary(gap, qs[i - 1], qs[i], 1e-14));
    }
    double price_lo;
    if (j + 1 == qs.size()) {
      // q = 1 qualifies, so every price in [target, v(1)] sells for sure.
      price_lo = std::max(0.0, target);
    } else {
      price_lo = d.value_at_quantile(numeric::bisect_boundary(gap, qs[j], qs[j + 1], 1e-14));
    }
    out.push_back({price_lo, price_hi});
    i = j + 1;
  }
  return PriceIntervalSet(std::move(out));
}

double quadratic_gap(const Distribution& d, double q_prime, double coefficient) {
  return quadratic_gap(d, monopoly(d), q_prime, coefficient);
}

double quadratic_gap(const Distribution& d, const RevenueSummary& m, double q_prime, double coefficient) {
  if (!(q_prime > 0.0 && q_prime <= 1.0)) throw ValidationError("lemma gap: q' must lie in (0, 1]");
  if (!m.attained) throw ValidationError("lemma gap: optimal revenue is not attained");
  const double dq = m.q_star - q_prime;
  return (m.r_star - revenue_at_quantile(d, q_prime)) - coefficient * dq * dq * m.r_star;
}

double lemma_gap_mhr(const Distribution& d, double q_prime) { return quadratic_gap(d, q_prime, 0.25); }

double lemma_gap_streg(const Distribution& d, double q_prime, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ValidationError("lemma gap: alpha must lie in (0, 1]");
  return quadratic_gap(d, q_prime, alpha / 3.0);
}

std::optional<double> lemma_gap_mhr_prepeak_third(const Distribution& d, double q_prime) {
  if (q_prime >= monopoly(d).q_star) return std::nullopt;
  return quadratic_gap(d, q_prime, 1.0 / 3.0);
}

double postpeak_dominates_exponential(const Distribution& d, double q) {
  return postpeak_dominates_exponential(d, monopoly(d), q);
}

double postpeak_dominates_exponential(const Distribution& d, const RevenueSummary& m, double q) {
  if (!m.attained) throw ValidationError("postpeak: optimal revenue is not attained");
  if (m.q_star >= 1.0) throw ValidationError("postpeak: no exponential shares v(q*) when q* = 1");
  if (!(q <= 1.0 && q >= m.q_star - 1e-12)) throw ValidationError("postpeak: q must lie in [q*, 1]");
  const double rate = -std::log(m.q_star) / m.v_star;
  const double r_exp = q == 1.0 ? 0.0 : -q * std::log(q) / rate;
  return revenue_at_quantile(d, q) - r_exp;
}

}  // namespace reserve_lab::curve
