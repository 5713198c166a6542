#include "reserve_lab/strategy.hpp"

#include <cmath>
#include <string>

#include "reserve_lab/errors.hpp"

namespace reserve_lab {

void PricingStrategy::validate() const {
  switch (kind) {
    case StrategyKind::GuardedEmpiricalReserve:
    case StrategyKind::Scaled:
      if (!(param > 0.0 && param <= 1.0)) {
        throw ValidationError(std::string(name()) + ": parameter must lie in (0, 1]");
      }
      break;
    case StrategyKind::Fixed:
      if (!(param >= 0.0 && std::isfinite(param))) throw ValidationError("fixed: price must be >= 0");
      break;
    default:
      break;
  }
}

bool PricingStrategy::has_param() const {
  return kind == StrategyKind::GuardedEmpiricalReserve || kind == StrategyKind::Scaled ||
         kind == StrategyKind::Fixed;
}

bool PricingStrategy::single_sample() const {
  return kind == StrategyKind::Identity || kind == StrategyKind::Scaled;
}

std::string_view PricingStrategy::name() const {
  switch (kind) {
    case StrategyKind::EmpiricalReserve:
      return "empirical_reserve";
    case StrategyKind::GuardedEmpiricalReserve:
      return "guarded_empirical_reserve";
    case StrategyKind::Identity:
      return "identity";
    case StrategyKind::Scaled:
      return "scaled";
    case StrategyKind::Fixed:
      return "fixed";
  }
  return "unknown";
}

StrategyKind strategy_kind_from_name(std::string_view name) {
  if (name == "empirical_reserve") return StrategyKind::EmpiricalReserve;
  if (name == "guarded_empirical_reserve") return StrategyKind::GuardedEmpiricalReserve;
  if (name == "identity") return StrategyKind::Identity;
  if (name == "scaled") return StrategyKind::Scaled;
  if (name == "fixed") return StrategyKind::Fixed;
  throw ValidationError("unknown strategy kind: " + std::string(name));
}

std::size_t empirical_reserve_index(std::span<const double> desc, std::size_t first) {
  if (desc.empty()) throw ValidationError("empirical reserve: empty batch");
  if (first < 1 || first > desc.size()) throw ValidationError("empirical reserve: guard index out of range");
  std::size_t best = first;
  double best_value = static_cast<double>(first) * desc[first - 1];
  for (std::size_t i = first + 1; i <= desc.size(); ++i) {
    const double value = static_cast<double>(i) * desc[i - 1];
    if (value > best_value) {
      best_value = value;
      best = i;
    }
  }
  return best;
}

std::size_t guard_index(double c, std::size_t m) {
  const auto g = static_cast<std::size_t>(std::ceil(c * static_cast<double>(m)));
  return g < 1 ? 1 : g;
}

double post_price(const PricingStrategy& s, std::span<const double> desc) {
  if (desc.empty()) throw ValidationError("post_price: empty batch");
  if (s.single_sample() && desc.size() != 1) {
    throw ValidationError(std::string(s.name()) + ": requires exactly one sample");
  }
  switch (s.kind) {
    case StrategyKind::EmpiricalReserve:
      return desc[empirical_reserve_index(desc) - 1];
    case StrategyKind::GuardedEmpiricalReserve:
      return desc[empirical_reserve_index(desc, guard_index(s.param, desc.size())) - 1];
    case StrategyKind::Identity:
      return desc[0];
    case StrategyKind::Scaled:
      return s.param * desc[0];
    case StrategyKind::Fixed:
      return s.param;
  }
  return 0.0;
}

double post_price(const PricingStrategy& s, const SampleBatch& batch) { return post_price(s, batch.values()); }

double expected_revenue_of_price(const Distribution& d, double p) {
  if (!(p >= 0.0)) throw ValidationError("expected_revenue_of_price: price must be >= 0");
  if (p == 0.0) return 0.0;
  return p * d.sale_probability(p);
}

}  // namespace reserve_lab
