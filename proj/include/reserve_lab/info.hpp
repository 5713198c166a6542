#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "reserve_lab/curve.hpp"
#include "reserve_lab/dist.hpp"

namespace reserve_lab::info {

// ln(f1(x) / f2(x)) using densities, or masses for discrete pairs. Exactly 0
// where the two agree; +-inf where one side vanishes.
double log_density_ratio(const Distribution& d1, const Distribution& d2, double x);

// Throws InfiniteDivergence when d1 puts mass where d2 has none.
double kl_divergence(const Distribution& d1, const Distribution& d2);

double statistical_distance(const Distribution& d1, const Distribution& d2);

// min(1, sqrt(m * kl_sum) / 2).
double pinsker_m_samples(double kl_sum, std::size_t m);

enum class PairKind { General, BoundedSupport, Regular, Mhr };
std::string_view pair_kind_name(PairKind k);
PairKind pair_kind_from_name(std::string_view name);

struct PairParams {
  double epsilon = 0.05;
  // General: delta. BoundedSupport: 1 / H.
  double delta = 0.1;
  // Mhr only: eps0 = c * epsilon. When absent, c is the smallest value in
  // {2, ..., 64} that separates the price sets (see mhr_pair_constant).
  std::optional<double> eps0;
};

struct LowerBoundPair {
  PairKind kind;
  Distribution d1;
  Distribution d2;
  double epsilon;
  double delta;  // General / BoundedSupport; 0 otherwise
  double eps0;   // Regular / Mhr; 0 otherwise
  double kl_sum_closed_form;
  double kl_sum_numeric;
  double reduction_samples;              // (4/9) / kl_sum_numeric
  double reduction_samples_closed_form;  // (4/9) / kl_sum_closed_form
  curve::PriceIntervalSet price_set1;    // (1 - 3 epsilon)-optimal prices of d1
  curve::PriceIntervalSet price_set2;
  bool price_sets_disjoint;
};

LowerBoundPair make_lb_pair(PairKind kind, const PairParams& params);

// Smallest c in {2, ..., 64} with c * epsilon < 1/4 whose MHR pair has
// disjoint (1 - 3 epsilon)-optimal price sets.
std::optional<int> mhr_pair_constant(double epsilon);

// (4/9) / kl_sum_numeric.
double reduction_bound(const LowerBoundPair& pair);

// KL-sum bound from a density-ratio band: (1+eps)^-1 <= f1/f2 <= 1+eps on the
// common support, optionally with f1 = f2 on [lo, hi] (no eps_prime) or the
// tighter band eps_prime there. The band is verified on quantile grids of both
// members first (HypothesisFailure "hypothesis fails at v=..."), and the
// numeric KL sum is checked against the result (NumericalAssertion).
struct ValueRange {
  double lo;
  double hi;
};
double density_ratio_kl_bound(const Distribution& d1, const Distribution& d2, double eps,
                              std::optional<double> eps_prime = std::nullopt,
                              std::optional<ValueRange> subset = std::nullopt);

struct ClassifyReport {
  double success_rate;
  double ci_half_width;
  double theoretical_cap;  // (pinsker_m_samples(kl_sum, m) + 1) / 2
  std::size_t m;
  std::size_t trials;
  std::uint64_t seed;
  bool cap_respected;  // success_rate <= cap + 3 * ci_half_width
};

ClassifyReport classify_lr(const Distribution& d1, const Distribution& d2, double kl_sum, std::size_t m,
                           std::size_t trials, std::uint64_t seed, int threads = 0);
ClassifyReport classify_lr(const LowerBoundPair& pair, std::size_t m, std::size_t trials, std::uint64_t seed,
                           int threads = 0);

struct LlrStats {
  double mean;
  double std_error;
};
// Mean of sum_{i<=m} ln(f1/f2)(X_i) with X_i ~ d1 over `trials` batches.
LlrStats llr_under_first(const Distribution& d1, const Distribution& d2, std::size_t m, std::size_t trials,
                         std::uint64_t seed);

}  // namespace reserve_lab::info
