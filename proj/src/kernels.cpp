#include "reserve_lab/kernels.hpp"

#include <cmath>
#include <vector>

#include <omp.h>

#include "reserve_lab/info.hpp"

namespace reserve_lab::kernels {
namespace {

double revenue_trial(const Distribution& d, const PricingStrategy& s, std::size_t m, std::uint64_t seed,
                     std::uint64_t t, std::vector<double>& scratch) {
  CounterRng rng(seed, t);
  draw_sorted(d, rng, scratch);
  return expected_revenue_of_price(d, post_price(s, std::span<const double>(scratch.data(), m)));
}

unsigned char classify_trial(const Distribution& d1, const Distribution& d2, std::size_t m, std::uint64_t seed,
                             std::uint64_t t) {
  CounterRng rng(seed, t);
  const bool second = rng.coin();
  const Distribution& truth = second ? d2 : d1;
  double llr = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double term = info::log_density_ratio(d1, d2, truth.value_at_quantile(rng.uniform()));
    llr += term;
    scale += std::abs(term);
  }
  bool say_second;
  if (std::isnan(llr) || std::abs(llr) <= 1e-12 * (1.0 + scale)) {
    say_second = rng.coin();
  } else {
    say_second = llr < 0.0;
  }
  return say_second == second ? 1 : 0;
}

}  // namespace

int default_threads() { return omp_get_max_threads(); }

void revenue_trials_serial(const Distribution& d, const PricingStrategy& s, std::size_t m, std::uint64_t seed,
                           std::span<double> out) {
  std::vector<double> scratch(m);
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = revenue_trial(d, s, m, seed, t, scratch);
}

void revenue_trials_parallel(const Distribution& d, const PricingStrategy& s, std::size_t m, std::uint64_t seed,
                             std::span<double> out, int threads) {
  const int nthreads = threads > 0 ? threads : default_threads();
  const auto n = static_cast<std::int64_t>(out.size());
#pragma omp parallel num_threads(nthreads)
  {
    std::vector<double> scratch(m);
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < n; ++t) {
      out[t] = revenue_trial(d, s, m, seed, static_cast<std::uint64_t>(t), scratch);
    }
  }
}

void classify_trials_serial(const Distribution& d1, const Distribution& d2, std::size_t m, std::uint64_t seed,
                            std::span<unsigned char> out) {
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = classify_trial(d1, d2, m, seed, t);
}

void classify_trials_parallel(const Distribution& d1, const Distribution& d2, std::size_t m, std::uint64_t seed,
                              std::span<unsigned char> out, int threads) {
  const int nthreads = threads > 0 ? threads : default_threads();
  const auto n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for num_threads(nthreads) schedule(static)
  for (std::int64_t t = 0; t < n; ++t) {
    out[t] = classify_trial(d1, d2, m, seed, static_cast<std::uint64_t>(t));
  }
}

Moments moments(std::span<const double> xs) {
  if (xs.empty()) return {0.0, 0.0};
  // Shifting by the first value keeps a constant sequence exact.
  const double shift = xs[0];
  double acc = 0.0;
  for (double x : xs) acc += x - shift;
  const double n = static_cast<double>(xs.size());
  const double mean = shift + acc / n;
  if (xs.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, ss / (n - 1.0)};
}

}  // namespace reserve_lab::kernels
