#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "reserve_lab/dist.hpp"

namespace reserve_lab {

enum class StrategyKind { EmpiricalReserve, GuardedEmpiricalReserve, Identity, Scaled, Fixed };

struct PricingStrategy {
  StrategyKind kind = StrategyKind::EmpiricalReserve;
  // Guard c, scale factor c, or the fixed price; unused otherwise.
  double param = 0.0;

  static PricingStrategy empirical_reserve() { return {StrategyKind::EmpiricalReserve, 0.0}; }
  static PricingStrategy guarded(double c) { return {StrategyKind::GuardedEmpiricalReserve, c}; }
  static PricingStrategy identity() { return {StrategyKind::Identity, 0.0}; }
  static PricingStrategy scaled(double c) { return {StrategyKind::Scaled, c}; }
  static PricingStrategy fixed(double p) { return {StrategyKind::Fixed, p}; }

  // Throws ValidationError for a guard or factor outside (0, 1] or a negative price.
  void validate() const;
  bool has_param() const;
  // Identity and Scaled see exactly one sample.
  bool single_sample() const;
  std::string_view name() const;

  bool operator==(const PricingStrategy&) const = default;
};

StrategyKind strategy_kind_from_name(std::string_view name);

// 1-based rank of the sample a reserve rule picks from a descending batch:
// argmax of i * v_i over i >= first, smallest i on ties.
std::size_t empirical_reserve_index(std::span<const double> desc, std::size_t first = 1);

// ceil(c * m), at least 1.
std::size_t guard_index(double c, std::size_t m);

// Price posted for a descending-sorted batch.
double post_price(const PricingStrategy& s, std::span<const double> desc);
double post_price(const PricingStrategy& s, const SampleBatch& batch);

// p * Pr[V >= p].
double expected_revenue_of_price(const Distribution& d, double p);

}  // namespace reserve_lab
