#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "reserve_lab/dist.hpp"

namespace reserve_lab::curve {

struct RevenueSummary {
  double q_star;
  double v_star;  // +inf when not attained
  double r_star;  // supremum when not attained
  bool attained;
};

struct PriceInterval {
  double lo;
  double hi;  // may be +inf
};

// Closed price intervals, sorted ascending and pairwise disjoint.
class PriceIntervalSet {
 public:
  PriceIntervalSet() = default;
  // Sorts and merges overlapping or touching intervals.
  explicit PriceIntervalSet(std::vector<PriceInterval> intervals);

  const std::vector<PriceInterval>& intervals() const noexcept { return intervals_; }
  bool empty() const noexcept { return intervals_.empty(); }
  bool contains(double p) const;
  PriceIntervalSet intersect(const PriceIntervalSet& other) const;
  bool disjoint_from(const PriceIntervalSet& other) const { return intersect(other).empty(); }
  // Every interval of *this lies inside some interval of `other`, up to `slack`.
  bool subset_of(const PriceIntervalSet& other, double slack = 0.0) const;

 private:
  std::vector<PriceInterval> intervals_;
};

// R(q) = q v(q). q = 0 gives 0 on bounded supports and throws UnboundedValue otherwise.
double revenue_at_quantile(const Distribution& d, double q);

RevenueSummary monopoly(const Distribution& d);

// max over q in [delta, 1] of R(q).
double restricted_optimal(const Distribution& d, double delta);

// phi(v) = v - (1 - F(v)) / f(v). Throws NoDensity for discrete families,
// at density breakpoints, and where f(v) = 0.
double virtual_value(const Distribution& d, double v);

enum class ClassKind { Regular, Mhr, StronglyRegular };

struct ClassSpec {
  ClassKind kind = ClassKind::Regular;
  double alpha = 0.0;  // used by StronglyRegular

  double threshold() const;
  static ClassSpec regular() { return {ClassKind::Regular, 0.0}; }
  static ClassSpec mhr() { return {ClassKind::Mhr, 1.0}; }
  static ClassSpec strongly_regular(double a) { return {ClassKind::StronglyRegular, a}; }
};

// Hazard rate f/(1-F) on both sides of a density breakpoint.
struct HazardJump {
  double value;
  double left;
  double right;
};

struct ClassReport {
  bool pass;
  double worst_margin;  // min over the grid of dphi/dv - threshold
  double worst_point;   // value where the minimum occurs
  std::vector<HazardJump> hazard_jumps;
};

// Central differences of phi on the values v((i + 1/2)/1000), skipping points
// within one step of a breakpoint. Passes when worst_margin >= -1e-6.
ClassReport class_check(const Distribution& d, ClassSpec spec);

// Prices p with p * Pr[V >= p] >= alpha * R*.
PriceIntervalSet alpha_optimal_prices(const Distribution& d, double alpha);

// [R(q*) - R(q')] - coefficient * (q* - q')^2 * R(q*).
double quadratic_gap(const Distribution& d, double q_prime, double coefficient);
// Same with the monopoly summary of d supplied by the caller.
double quadratic_gap(const Distribution& d, const RevenueSummary& peak, double q_prime, double coefficient);
// Coefficient 1/4.
double lemma_gap_mhr(const Distribution& d, double q_prime);
// Coefficient alpha/3.
double lemma_gap_streg(const Distribution& d, double q_prime, double alpha);
// Coefficient 1/3, which the argument for q' < q* actually yields; nullopt for q' >= q*.
std::optional<double> lemma_gap_mhr_prepeak_third(const Distribution& d, double q_prime);

// R(q) - R_exp(q) for q in [q*, 1], where R_exp belongs to the exponential
// scaled to share v(q*). Throws ValidationError for q < q* or q* = 1.
double postpeak_dominates_exponential(const Distribution& d, double q);
double postpeak_dominates_exponential(const Distribution& d, const RevenueSummary& peak, double q);

}  // namespace reserve_lab::curve
