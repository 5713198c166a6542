#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reserve_lab/dist.hpp"
#include "reserve_lab/strategy.hpp"

namespace reserve_lab::eval {

enum class Method { Quadrature, MonteCarlo };
std::string_view method_name(Method m);

struct Benchmark {
  enum class Kind { Monopoly, Restricted };
  Kind kind = Kind::Monopoly;
  double delta = 0.0;

  static Benchmark monopoly() { return {Kind::Monopoly, 0.0}; }
  static Benchmark restricted(double delta) { return {Kind::Restricted, delta}; }
  bool operator==(const Benchmark&) const = default;
};

struct EvalReport {
  double ratio;
  double revenue;
  double benchmark;
  double ci95;  // 0 for quadrature
  std::size_t trials;
  Method method;
  std::uint64_t seed;
  std::size_t m;
  bool benchmark_is_supremum;  // monopoly revenue not attained
};

struct BenchmarkValue {
  double value;
  bool supremum;
};
BenchmarkValue benchmark_value(const Distribution& d, const Benchmark& b);

// Exact expected revenue of a single-sample rule: integral over q in (0, 1] of
// p(v(q)) Pr[V >= p(v(q))], split at the kinks of both factors.
double single_sample_revenue(const Distribution& d, const PricingStrategy& s);

// Quadrature for single-sample rules at m = 1, Rao-Blackwellized Monte-Carlo
// otherwise. `threads` <= 0 means the OpenMP default; it never changes results.
EvalReport eval_strategy(const Distribution& d, const PricingStrategy& s, std::size_t m, const Benchmark& benchmark,
                         std::size_t trials, std::uint64_t seed, int threads = 0);

// Same estimator through the serial trial loop.
EvalReport eval_strategy_serial(const Distribution& d, const PricingStrategy& s, std::size_t m,
                                const Benchmark& benchmark, std::size_t trials, std::uint64_t seed);

// (c, ratio) for Scaled(c) at m = 1; c = 0 posts price 0 and earns 0.
std::vector<std::pair<double, double>> scaled_ratio_curve(const Distribution& d, std::span<const double> c_grid);

struct SweepRow {
  double epsilon;
  std::size_t trials;
  std::size_t m_found;
  std::size_t m_smoothed;  // running max over decreasing epsilon
  double ratio_at_m;
  double ci95_at_m;
  std::uint64_t seed;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // epsilon descending
  std::string schedule;
  double slope;  // least-squares slope of ln m_smoothed against ln epsilon; NaN with fewer than two rows
};

struct SweepSpec {
  std::vector<double> epsilons;
  std::vector<std::size_t> trials;  // one entry per epsilon, or a single shared entry
  std::uint64_t seed = 0;
  std::size_t m_max = std::size_t{1} << 20;
  int threads = 0;
};

// Doubling then bisection for the least m (within 10%) with ratio - ci95 >= 1 - eps.
// Throws ValidationError("insufficient trials ...") when an evaluation's ci95 reaches eps/5.
SweepResult sweep_sample_complexity(const Distribution& d, const PricingStrategy& s, const Benchmark& benchmark,
                                    const SweepSpec& spec);

double log_log_slope(std::span<const double> eps, std::span<const double> m);

// gamma * integral of p(v) / (v + p(v) + gamma)^2 over the grid's range, with p
// linear between grid nodes. Throws ValidationError("best-response domain
// violated ...") if some p_i lies outside [0, v_i].
double mixture_objective(std::span<const double> v_grid, std::span<const double> p_grid, double gamma);
// Same for a pricing function on [0, v_max].
double mixture_objective(const std::function<double(double)>& p, double v_max, double gamma);

}  // namespace reserve_lab::eval
