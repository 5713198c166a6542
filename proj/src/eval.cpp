#include "reserve_lab/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "reserve_lab/curve.hpp"
#include "reserve_lab/errors.hpp"
#include "reserve_lab/kernels.hpp"
#include "reserve_lab/numeric.hpp"

namespace reserve_lab::eval {
namespace {

constexpr double kZ95 = 1.959963984540054;

void check_common(const PricingStrategy& s, std::size_t m, std::size_t trials) {
  s.validate();
  if (m < 1) throw ValidationError("eval: m must be >= 1");
  if (trials < 1) throw ValidationError("eval: trials must be >= 1");
  if (s.single_sample() && m != 1) throw ValidationError(std::string(s.name()) + ": requires m = 1");
}

EvalReport finish(double revenue, const BenchmarkValue& bv, double ci95, std::size_t trials, Method method,
                  std::uint64_t seed, std::size_t m) {
  return {revenue / bv.value, revenue, bv.value, ci95, trials, method, seed, m, bv.supremum};
}

EvalReport run(const Distribution& d, const PricingStrategy& s, std::size_t m, const Benchmark& benchmark,
               std::size_t trials, std::uint64_t seed, bool parallel, int threads) {
  check_common(s, m, trials);
  const BenchmarkValue bv = benchmark_value(d, benchmark);
  if (s.single_sample()) {
    return finish(single_sample_revenue(d, s), bv, 0.0, 0, Method::Quadrature, seed, m);
  }
  std::vector<double> per_trial(trials);
  if (parallel) {
    kernels::revenue_trials_parallel(d, s, m, seed, per_trial, threads);
  } else {
    kernels::revenue_trials_serial(d, s, m, seed, per_trial);
  }
  const auto mom = kernels::moments(per_trial);
  const double ci = kZ95 * std::sqrt(mom.variance / static_cast<double>(trials));
  return finish(mom.mean, bv, ci, trials, Method::MonteCarlo, seed, m);
}

}  // namespace

std::string_view method_name(Method m) { return m == Method::Quadrature ? "quadrature" : "monte_carlo"; }

BenchmarkValue benchmark_value(const Distribution& d, const Benchmark& b) {
  BenchmarkValue out{};
  if (b.kind == Benchmark::Kind::Monopoly) {
    const auto summary = curve::monopoly(d);
    out = {summary.r_star, !summary.attained};
  } else {
    out = {curve::restricted_optimal(d, b.delta), false};
  }
  if (!(out.value > 0.0)) throw ValidationError("benchmark revenue must be positive");
  return out;
}

double single_sample_revenue(const Distribution& d, const PricingStrategy& s) {
  s.validate();
  if (!s.single_sample()) throw ValidationError("single_sample_revenue: strategy needs more than one sample");
  const double c = s.kind == StrategyKind::Identity ? 1.0 : s.param;

  if (d.discrete()) {
    double total = 0.0;
    for (const Atom& a : d.atoms()) total += a.mass * expected_revenue_of_price(d, c * a.value);
    return total;
  }

  const bool bounded = d.bounded_above();
  const auto integrand = [&](double q) {
    if (q <= 0.0) {
      if (bounded) return expected_revenue_of_price(d, c * d.support_max());
      q = std::numeric_limits<double>::min();
    }
    return expected_revenue_of_price(d, c * d.value_at_quantile(q));
  };

  std::vector<double> kinks = d.breakpoints();
  kinks.push_back(d.support_min());
  if (bounded) kinks.push_back(d.support_max());
  std::vector<double> breaks;
  for (double b : kinks) {
    breaks.push_back(d.quantile_of_value(b));
    breaks.push_back(d.quantile_of_value(b / c));
  }
  return numeric::adaptive_simpson(integrand, 0.0, 1.0, 1e-11, breaks);
}

EvalReport eval_strategy(const Distribution& d, const PricingStrategy& s, std::size_t m, const Benchmark& benchmark,
                         std::size_t trials, std::uint64_t seed, int threads) {
  return run(d, s, m, benchmark, trials, seed, true, threads);
}

EvalReport eval_strategy_serial(const Distribution& d, const PricingStrategy& s, std::size_t m,
                                const Benchmark& benchmark, std::size_t trials, std::uint64_t seed) {
  return run(d, s, m, benchmark, trials, seed, false, 1);
}

std::vector<std::pair<double, double>> scaled_ratio_curve(const Distribution& d, std::span<const double> c_grid) {
  const double r_star = benchmark_value(d, Benchmark::monopoly()).value;
  std::vector<std::pair<double, double>> out;
  out.reserve(c_grid.size());
  for (double c : c_grid) {
    if (c == 0.0) {
      out.emplace_back(c, 0.0);
      continue;
    }
    out.emplace_back(c, single_sample_revenue(d, PricingStrategy::scaled(c)) / r_star);
  }
  return out;
}

double log_log_slope(std::span<const double> eps, std::span<const double> m) {
  if (eps.size() != m.size() || eps.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  const double n = static_cast<double>(eps.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const double x = std::log(eps[i]);
    const double y = std::log(m[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return (n * sxy - sx * sy) / denom;
}

SweepResult sweep_sample_complexity(const Distribution& d, const PricingStrategy& s, const Benchmark& benchmark,
                                    const SweepSpec& spec) {
  if (spec.epsilons.empty()) throw ValidationError("sweep: no epsilon values");
  if (spec.trials.size() != 1 && spec.trials.size() != spec.epsilons.size()) {
    throw ValidationError("sweep: trials must hold one entry or one per epsilon");
  }
  if (s.single_sample()) throw ValidationError("sweep: strategy must accept m > 1");

  struct Job {
    double eps;
    std::size_t trials;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < spec.epsilons.size(); ++i) {
    const double eps = spec.epsilons[i];
    if (!(eps > 0.0 && eps < 1.0)) throw ValidationError("sweep: epsilon must lie in (0, 1)");
    jobs.push_back({eps, spec.trials.size() == 1 ? spec.trials[0] : spec.trials[i]});
  }
  std::stable_sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.eps > b.eps; });

  SweepResult result;
  std::size_t running = 0;
  for (const Job& job : jobs) {
    const auto evaluate = [&](std::size_t m) {
      const EvalReport r = eval_strategy(d, s, m, benchmark, job.trials, spec.seed, spec.threads);
      if (r.ci95 >= job.eps / 5.0) {
        std::ostringstream os;
        os << "insufficient trials: ci95 " << r.ci95 << " >= eps/5 at eps " << job.eps << ", m " << m;
        throw ValidationError(os.str());
      }
      return r;
    };
    const auto passes = [&](const EvalReport& r) { return r.ratio - r.ci95 >= 1.0 - job.eps; };

    std::size_t hi = 1;
    EvalReport at_hi = evaluate(hi);
    std::size_t lo = 0;
    while (!passes(at_hi)) {
      lo = hi;
      hi *= 2;
      if (hi > spec.m_max) {
        std::ostringstream os;
        os << "sweep: no m <= " << spec.m_max << " reaches ratio 1 - " << job.eps;
        throw NumericalAssertion(os.str());
      }
      at_hi = evaluate(hi);
    }
    while (lo > 0 && hi - lo > std::max<std::size_t>(1, lo / 10)) {
      const std::size_t mid = lo + (hi - lo) / 2;
      const EvalReport at_mid = evaluate(mid);
      if (passes(at_mid)) {
        hi = mid;
        at_hi = at_mid;
      } else {
        lo = mid;
      }
    }
    running = std::max(running, hi);
    result.rows.push_back({job.eps, job.trials, hi, running, at_hi.ratio, at_hi.ci95, spec.seed});
  }

  std::vector<double> xs, ys;
  for (const SweepRow& row : result.rows) {
    xs.push_back(row.epsilon);
    ys.push_back(static_cast<double>(row.m_smoothed));
  }
  result.slope = log_log_slope(xs, ys);
  result.schedule =
      "doubling from m=1, then bisection until the bracket is within 10% of its lower end; "
      "pass when ratio - ci95 >= 1 - eps";
  return result;
}

double mixture_objective(std::span<const double> v_grid, std::span<const double> p_grid, double gamma) {
  if (!(gamma > 0.0)) throw ValidationError("mixture_objective: gamma must be > 0");
  if (v_grid.size() != p_grid.size() || v_grid.size() < 2) {
    throw ValidationError("mixture_objective: need matching grids with at least two points");
  }
  for (std::size_t i = 0; i < v_grid.size(); ++i) {
    if (i > 0 && !(v_grid[i] > v_grid[i - 1])) throw ValidationError("mixture_objective: grid must increase");
    if (v_grid[i] < 0.0) throw ValidationError("mixture_objective: values must be >= 0");
    if (p_grid[i] > v_grid[i] || p_grid[i] < 0.0) {
      std::ostringstream os;
      os << "best-response domain violated at v=" << v_grid[i];
      throw ValidationError(os.str());
    }
  }
  const double span_len = v_grid.back() - v_grid.front();
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < v_grid.size(); ++i) {
    const double v0 = v_grid[i], v1 = v_grid[i + 1];
    const double p0 = p_grid[i], p1 = p_grid[i + 1];
    const auto integrand = [&](double v) {
      const double p = p0 + (p1 - p0) * (v - v0) / (v1 - v0);
      const double den = v + p + gamma;
      return p / (den * den);
    };
    total += numeric::adaptive_simpson(integrand, v0, v1, 1e-12 * (v1 - v0) / span_len);
  }
  return gamma * total;
}

double mixture_objective(const std::function<double(double)>& p, double v_max, double gamma) {
  if (!(gamma > 0.0)) throw ValidationError("mixture_objective: gamma must be > 0");
  if (!(v_max > 0.0) || !std::isfinite(v_max)) throw ValidationError("mixture_objective: v_max must be finite and > 0");
  const auto integrand = [&](double v) {
    const double pv = p(v);
    if (pv > v || pv < 0.0) {
      std::ostringstream os;
      os << "best-response domain violated at v=" << v;
      throw ValidationError(os.str());
    }
    const double den = v + pv + gamma;
    return pv / (den * den);
  };
  return gamma * numeric::adaptive_simpson(integrand, 0.0, v_max, 1e-12);
}

}  // namespace reserve_lab::eval
