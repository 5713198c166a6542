#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "reserve_lab/rng.hpp"

namespace reserve_lab {

// Valuation families. Each is a plain parameter record; Distribution validates
// the parameters and supplies the analytic maps.

struct Exponential {
  double rate = 1.0;
  bool operator==(const Exponential&) const = default;
};

struct UniformInterval {
  double lo = 0.0;
  double hi = 1.0;
  bool operator==(const UniformInterval&) const = default;
};

// F(v) = 1 - 1/(v+1): every price earns v/(v+1), supremum 1.
struct EqualRevenue {
  bool operator==(const EqualRevenue&) const = default;
};

struct PointMass {
  double value = 1.0;
  bool operator==(const PointMass&) const = default;
};

// Survival (1 + shape*v/scale)^(-1/shape); dphi/dv = 1 - shape.
struct GeneralizedPareto {
  double shape = 0.5;
  double scale = 1.0;
  bool operator==(const GeneralizedPareto&) const = default;
};

// Exponential scaled so that v(knee) = 1, with the mass above 1 spread
// uniformly on [1, 1 + plateau]: v(q) = ln q / ln knee for q >= knee and
// v(q) = 1 + plateau * (1 - q/knee) for q <= knee.
struct TruncatedExponential {
  double knee_quantile = 0.43;
  double plateau_width = 0.74;
  bool operator==(const TruncatedExponential&) const = default;
};

// Three-point hard pair on {1, 2, H = 1/delta}. Member 1 puts (1+3eps)/H on H
// and (1-3eps)/H on 2; member 2 swaps them. Value 1 carries 1 - 2/H.
struct GeneralLbMember {
  double delta = 0.1;
  double epsilon = 0.05;
  int which = 1;
  bool operator==(const GeneralLbMember&) const = default;
};

// Member 1 is the equal-revenue distribution. Member 2 agrees with it up to
// t = (1-2e0)/(2e0) and has tail survival (1-2e0)^2 / (v - (1-2e0)) beyond.
struct RegularLbMember {
  double eps0 = 0.15;
  int which = 1;
  bool operator==(const RegularLbMember&) const = default;
};

// Member 1 is uniform on [1, 2]. Member 2 has density 1 - 2 sqrt(e0) on
// [1, 1 + sqrt(e0)] and 1 + 2 e0 / (1 - sqrt(e0)) on (1 + sqrt(e0), 2].
struct MhrLbMember {
  double eps0 = 0.04;
  int which = 1;
  bool operator==(const MhrLbMember&) const = default;
};

// Exponential(lambda) with lambda ~ Exponential(gamma); marginal
// F(v) = 1 - gamma / (gamma + v).
struct ExpMixture {
  double gamma = 1.0;
  bool operator==(const ExpMixture&) const = default;
};

using Family = std::variant<Exponential, UniformInterval, EqualRevenue, PointMass, GeneralizedPareto,
                            TruncatedExponential, GeneralLbMember, RegularLbMember, MhrLbMember, ExpMixture>;

struct Atom {
  double value;
  double mass;
};

class Distribution {
 public:
  // Throws ValidationError when the parameters are outside the family's range.
  explicit Distribution(Family family);

  static Distribution exponential(double rate) { return Distribution(Exponential{rate}); }
  static Distribution uniform(double lo, double hi) { return Distribution(UniformInterval{lo, hi}); }
  static Distribution equal_revenue() { return Distribution(EqualRevenue{}); }
  static Distribution point_mass(double v) { return Distribution(PointMass{v}); }
  static Distribution generalized_pareto(double shape, double scale) {
    return Distribution(GeneralizedPareto{shape, scale});
  }
  static Distribution truncated_exponential(double knee, double plateau) {
    return Distribution(TruncatedExponential{knee, plateau});
  }
  static Distribution exp_mixture(double gamma) { return Distribution(ExpMixture{gamma}); }

  const Family& family() const noexcept { return family_; }
  std::string_view family_name() const;

  double cdf(double v) const;
  // Density, or nullopt for discrete families.
  std::optional<double> pdf(double v) const;
  // Pr[V >= price]: the left limit 1 - F(price-), so a price equal to an atom sells.
  double sale_probability(double price) const;
  // q(v) = 1 - F(v).
  double quantile_of_value(double v) const { return 1.0 - cdf(v); }
  // sup{v : Pr[V >= v] >= q} for q in (0, 1]. Continuous families invert the
  // survival function; discrete ones return the highest atom reached. q = 0 is
  // accepted for bounded supports and throws UnboundedValue otherwise.
  double value_at_quantile(double q) const;

  double support_min() const;
  double support_max() const;  // +inf for unbounded families
  bool discrete() const;
  bool bounded_above() const;
  // Ascending atoms (empty for continuous families).
  std::vector<Atom> atoms() const;
  // Interior values where F or f is not smooth.
  std::vector<double> breakpoints() const;

  // Families that are MHR by construction (continuity points only; see
  // curve::class_check for the hazard jumps at breakpoints).
  bool declared_mhr() const;
  // alpha with dphi/dv >= alpha by construction; nullopt for discrete families.
  std::optional<double> declared_strong_regularity() const;

  bool operator==(const Distribution&) const = default;

 private:
  Family family_;
};

// m draws, sorted descending.
class SampleBatch {
 public:
  SampleBatch(std::vector<double> values, std::uint64_t source_seed);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::uint64_t source_seed() const noexcept { return source_seed_; }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<double> values_;
  std::uint64_t source_seed_;
};

// Fills `out` with i.i.d. draws via the quantile transform of rng uniforms and
// sorts it descending.
void draw_sorted(const Distribution& d, CounterRng& rng, std::span<double> out);

// Deterministic in (d, seed, m): uses stream 0 of the counter RNG.
SampleBatch sample(const Distribution& d, std::uint64_t seed, std::size_t m);

// Two-stage sampler for ExpMixture: lambda ~ Exponential(gamma), then
// v ~ Exponential(lambda). Same law as the closed-form marginal.
SampleBatch sample_mixture_two_stage(const ExpMixture& mix, std::uint64_t seed, std::size_t m);

}  // namespace reserve_lab
