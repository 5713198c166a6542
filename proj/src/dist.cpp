#include "reserve_lab/dist.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "reserve_lab/errors.hpp"

namespace reserve_lab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void reject(std::string_view family, std::string_view what) {
  std::ostringstream os;
  os << family << ": " << what;
  throw ValidationError(os.str());
}

void require(bool ok, std::string_view family, std::string_view what) {
  if (!ok) reject(family, what);
}

[[noreturn]] void unbounded(std::string_view family) {
  throw UnboundedValue(std::string(family) + ": unbounded value at quantile 0");
}

// ---------------------------------------------------------------------------
// Per-family analytic pieces. Each family implements the same small set of
// functions; Distribution dispatches on the variant.

// Exponential
double cdf_of(const Exponential& d, double v) { return v <= 0.0 ? 0.0 : -std::expm1(-d.rate * v); }
std::optional<double> pdf_of(const Exponential& d, double v) {
  return v < 0.0 ? 0.0 : d.rate * std::exp(-d.rate * v);
}
double sale_of(const Exponential& d, double p) { return p <= 0.0 ? 1.0 : std::exp(-d.rate * p); }
double value_of(const Exponential& d, double q) {
  if (q == 0.0) unbounded("exponential");
  return -std::log(q) / d.rate;
}
double smin_of(const Exponential&) { return 0.0; }
double smax_of(const Exponential&) { return kInf; }

// UniformInterval
double cdf_of(const UniformInterval& d, double v) {
  if (v <= d.lo) return 0.0;
  if (v >= d.hi) return 1.0;
  return (v - d.lo) / (d.hi - d.lo);
}
std::optional<double> pdf_of(const UniformInterval& d, double v) {
  return (v >= d.lo && v <= d.hi) ? 1.0 / (d.hi - d.lo) : 0.0;
}
double sale_of(const UniformInterval& d, double p) { return 1.0 - cdf_of(d, p); }
double value_of(const UniformInterval& d, double q) { return d.hi - q * (d.hi - d.lo); }
double smin_of(const UniformInterval& d) { return d.lo; }
double smax_of(const UniformInterval& d) { return d.hi; }

// EqualRevenue
double cdf_of(const EqualRevenue&, double v) { return v <= 0.0 ? 0.0 : v / (v + 1.0); }
std::optional<double> pdf_of(const EqualRevenue&, double v) {
  return v < 0.0 ? 0.0 : 1.0 / ((v + 1.0) * (v + 1.0));
}
double sale_of(const EqualRevenue&, double p) { return p <= 0.0 ? 1.0 : 1.0 / (p + 1.0); }
double value_of(const EqualRevenue&, double q) {
  if (q == 0.0) unbounded("equal_revenue");
  return 1.0 / q - 1.0;
}
double smin_of(const EqualRevenue&) { return 0.0; }
double smax_of(const EqualRevenue&) { return kInf; }

// GeneralizedPareto
double gp_survival(const GeneralizedPareto& d, double v) {
  if (v <= 0.0) return 1.0;
  if (d.shape == 0.0) return std::exp(-v / d.scale);
  return std::exp(-std::log1p(d.shape * v / d.scale) / d.shape);
}
double cdf_of(const GeneralizedPareto& d, double v) { return 1.0 - gp_survival(d, v); }
std::optional<double> pdf_of(const GeneralizedPareto& d, double v) {
  if (v < 0.0) return 0.0;
  return gp_survival(d, v) / (d.scale + d.shape * v);
}
double sale_of(const GeneralizedPareto& d, double p) { return gp_survival(d, p); }
double value_of(const GeneralizedPareto& d, double q) {
  if (q == 0.0) unbounded("generalized_pareto");
  if (d.shape == 0.0) return -d.scale * std::log(q);
  return d.scale * std::expm1(-d.shape * std::log(q)) / d.shape;
}
double smin_of(const GeneralizedPareto&) { return 0.0; }
double smax_of(const GeneralizedPareto&) { return kInf; }

// TruncatedExponential
double cdf_of(const TruncatedExponential& d, double v) {
  if (v <= 0.0) return 0.0;
  if (v <= 1.0) return -std::expm1(v * std::log(d.knee_quantile));
  if (v >= 1.0 + d.plateau_width) return 1.0;
  return 1.0 - d.knee_quantile * (1.0 - (v - 1.0) / d.plateau_width);
}
std::optional<double> pdf_of(const TruncatedExponential& d, double v) {
  if (v < 0.0 || v > 1.0 + d.plateau_width) return 0.0;
  const double rate = -std::log(d.knee_quantile);
  if (v < 1.0) return rate * std::exp(-rate * v);
  return d.knee_quantile / d.plateau_width;
}
double sale_of(const TruncatedExponential& d, double p) { return 1.0 - cdf_of(d, p); }
double value_of(const TruncatedExponential& d, double q) {
  if (q >= d.knee_quantile) return std::log(q) / std::log(d.knee_quantile);
  return 1.0 + d.plateau_width * (1.0 - q / d.knee_quantile);
}
double smin_of(const TruncatedExponential&) { return 0.0; }
double smax_of(const TruncatedExponential& d) { return 1.0 + d.plateau_width; }

// GeneralLbMember
std::vector<Atom> atoms_of(const GeneralLbMember& d) {
  const double h = 1.0 / d.delta;
  const double up = (1.0 + 3.0 * d.epsilon) / h;
  const double down = (1.0 - 3.0 * d.epsilon) / h;
  const double top = d.which == 1 ? up : down;
  const double mid = d.which == 1 ? down : up;
  return {{1.0, 1.0 - 2.0 / h}, {2.0, mid}, {h, top}};
}

// PointMass
std::vector<Atom> atoms_of(const PointMass& d) { return {{d.value, 1.0}}; }

double discrete_cdf(const std::vector<Atom>& atoms, double v) {
  double acc = 0.0;
  for (const Atom& a : atoms) {
    if (a.value <= v) acc += a.mass;
  }
  return std::min(acc, 1.0);
}
double discrete_sale(const std::vector<Atom>& atoms, double p) {
  double acc = 0.0;
  for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
    if (it->value >= p) acc += it->mass;
  }
  return std::min(acc, 1.0);
}
double discrete_value(const std::vector<Atom>& atoms, double q) {
  // Highest atom whose sale probability still reaches q.
  double tail = 0.0;
  for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
    tail += it->mass;
    if (tail >= q) return it->value;
  }
  return atoms.front().value;
}

// RegularLbMember
struct RegularTail {
  double a;  // 1 - 2 e0
  double t;  // breakpoint (1 - 2 e0) / (2 e0)
};
RegularTail regular_tail(const RegularLbMember& d) {
  return {1.0 - 2.0 * d.eps0, (1.0 - 2.0 * d.eps0) / (2.0 * d.eps0)};
}
double cdf_of(const RegularLbMember& d, double v) {
  if (d.which == 1) return cdf_of(EqualRevenue{}, v);
  const auto [a, t] = regular_tail(d);
  if (v <= t) return cdf_of(EqualRevenue{}, v);
  return 1.0 - a * a / (v - a);
}
std::optional<double> pdf_of(const RegularLbMember& d, double v) {
  if (d.which == 1) return pdf_of(EqualRevenue{}, v);
  const auto [a, t] = regular_tail(d);
  if (v <= t) return pdf_of(EqualRevenue{}, v);
  return a * a / ((v - a) * (v - a));
}
double sale_of(const RegularLbMember& d, double p) { return p <= 0.0 ? 1.0 : 1.0 - cdf_of(d, p); }
double value_of(const RegularLbMember& d, double q) {
  if (q == 0.0) unbounded("regular_lb");
  if (d.which == 1 || q >= 2.0 * d.eps0) return 1.0 / q - 1.0;
  const double a = 1.0 - 2.0 * d.eps0;
  return a + a * a / q;
}
double smin_of(const RegularLbMember&) { return 0.0; }
double smax_of(const RegularLbMember&) { return kInf; }

// MhrLbMember
struct MhrSteps {
  double knot;  // 1 + sqrt(e0)
  double low;   // density on [1, knot]
  double high;  // density on (knot, 2]
};
MhrSteps mhr_steps(const MhrLbMember& d) {
  const double s = std::sqrt(d.eps0);
  return {1.0 + s, 1.0 - 2.0 * s, 1.0 + 2.0 * d.eps0 / (1.0 - s)};
}
double cdf_of(const MhrLbMember& d, double v) {
  if (d.which == 1) return cdf_of(UniformInterval{1.0, 2.0}, v);
  const auto [knot, low, high] = mhr_steps(d);
  if (v <= 1.0) return 0.0;
  if (v <= knot) return low * (v - 1.0);
  if (v >= 2.0) return 1.0;
  // Written as 1 - survival so that F(2) = 1 holds without rounding drift.
  return 1.0 - high * (2.0 - v);
}
std::optional<double> pdf_of(const MhrLbMember& d, double v) {
  if (d.which == 1) return pdf_of(UniformInterval{1.0, 2.0}, v);
  const auto [knot, low, high] = mhr_steps(d);
  if (v < 1.0 || v > 2.0) return 0.0;
  return v <= knot ? low : high;
}
double sale_of(const MhrLbMember& d, double p) { return 1.0 - cdf_of(d, p); }
double value_of(const MhrLbMember& d, double q) {
  if (d.which == 1) return 2.0 - q;
  const auto [knot, low, high] = mhr_steps(d);
  const double knee = high * (2.0 - knot);
  if (q >= knee) return 1.0 + (1.0 - q) / low;
  return 2.0 - q / high;
}
double smin_of(const MhrLbMember&) { return 1.0; }
double smax_of(const MhrLbMember&) { return 2.0; }

// ExpMixture
double cdf_of(const ExpMixture& d, double v) { return v <= 0.0 ? 0.0 : v / (d.gamma + v); }
std::optional<double> pdf_of(const ExpMixture& d, double v) {
  return v < 0.0 ? 0.0 : d.gamma / ((d.gamma + v) * (d.gamma + v));
}
double sale_of(const ExpMixture& d, double p) { return p <= 0.0 ? 1.0 : d.gamma / (d.gamma + p); }
double value_of(const ExpMixture& d, double q) {
  if (q == 0.0) unbounded("exp_mixture");
  return d.gamma * (1.0 / q - 1.0);
}
double smin_of(const ExpMixture&) { return 0.0; }
double smax_of(const ExpMixture&) { return kInf; }

// ---------------------------------------------------------------------------

void validate(const Family& family) {
  std::visit(Overloaded{
                 [](const Exponential& d) { require(d.rate > 0.0 && std::isfinite(d.rate), "exponential", "rate must be > 0"); },
                 [](const UniformInterval& d) {
                   require(std::isfinite(d.lo) && std::isfinite(d.hi) && d.lo >= 0.0 && d.lo < d.hi, "uniform",
                           "need 0 <= lo < hi");
                 },
                 [](const EqualRevenue&) {},
                 [](const PointMass& d) {
                   require(d.value > 0.0 && std::isfinite(d.value), "point_mass", "value must be > 0");
                 },
                 [](const GeneralizedPareto& d) {
                   require(d.shape >= 0.0 && d.shape < 1.0, "generalized_pareto", "shape must be in [0, 1)");
                   require(d.scale > 0.0 && std::isfinite(d.scale), "generalized_pareto", "scale must be > 0");
                 },
                 [](const TruncatedExponential& d) {
                   require(d.knee_quantile > 0.0 && d.knee_quantile < 1.0, "truncated_exponential",
                           "knee quantile must be in (0, 1)");
                   require(d.plateau_width > 0.0 && std::isfinite(d.plateau_width), "truncated_exponential",
                           "plateau width must be > 0");
                 },
                 [](const GeneralLbMember& d) {
                   require(d.delta > 0.0 && d.delta < 0.5, "general_lb", "delta must be in (0, 1/2)");
                   require(d.epsilon > 0.0 && d.epsilon < 1.0 / 6.0, "general_lb", "epsilon must be in (0, 1/6)");
                   require(d.which == 1 || d.which == 2, "general_lb", "which must be 1 or 2");
                 },
                 [](const RegularLbMember& d) {
                   require(d.eps0 > 0.0 && d.eps0 < 0.5, "regular_lb", "eps0 must be in (0, 1/2)");
                   require(d.which == 1 || d.which == 2, "regular_lb", "which must be 1 or 2");
                 },
                 [](const MhrLbMember& d) {
                   require(d.eps0 > 0.0 && d.eps0 < 0.25, "mhr_lb", "eps0 must be in (0, 1/4)");
                   require(d.which == 1 || d.which == 2, "mhr_lb", "which must be 1 or 2");
                 },
                 [](const ExpMixture& d) {
                   require(d.gamma > 0.0 && std::isfinite(d.gamma), "exp_mixture", "gamma must be > 0");
                 },
             },
             family);
}

bool is_discrete_family(const Family& f) {
  return std::holds_alternative<PointMass>(f) || std::holds_alternative<GeneralLbMember>(f);
}

}  // namespace

Distribution::Distribution(Family family) : family_(std::move(family)) { validate(family_); }

std::string_view Distribution::family_name() const {
  return std::visit(Overloaded{
                        [](const Exponential&) { return std::string_view("exponential"); },
                        [](const UniformInterval&) { return std::string_view("uniform"); },
                        [](const EqualRevenue&) { return std::string_view("equal_revenue"); },
                        [](const PointMass&) { return std::string_view("point_mass"); },
                        [](const GeneralizedPareto&) { return std::string_view("generalized_pareto"); },
                        [](const TruncatedExponential&) { return std::string_view("truncated_exponential"); },
                        [](const GeneralLbMember&) { return std::string_view("general_lb"); },
                        [](const RegularLbMember&) { return std::string_view("regular_lb"); },
                        [](const MhrLbMember&) { return std::string_view("mhr_lb"); },
                        [](const ExpMixture&) { return std::string_view("exp_mixture"); },
                    },
                    family_);
}

std::vector<Atom> Distribution::atoms() const {
  if (const auto* p = std::get_if<PointMass>(&family_)) return atoms_of(*p);
  if (const auto* g = std::get_if<GeneralLbMember>(&family_)) return atoms_of(*g);
  return {};
}

bool Distribution::discrete() const { return is_discrete_family(family_); }

double Distribution::cdf(double v) const {
  if (discrete()) return discrete_cdf(atoms(), v);
  return std::visit(
      [&](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, PointMass> || std::is_same_v<T, GeneralLbMember>) {
          return 0.0;
        } else {
          return cdf_of(f, v);
        }
      },
      family_);
}

std::optional<double> Distribution::pdf(double v) const {
  return std::visit(
      [&](const auto& f) -> std::optional<double> {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, PointMass> || std::is_same_v<T, GeneralLbMember>) {
          return std::nullopt;
        } else {
          return pdf_of(f, v);
        }
      },
      family_);
}

double Distribution::sale_probability(double price) const {
  if (discrete()) return discrete_sale(atoms(), price);
  return std::visit(
      [&](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, PointMass> || std::is_same_v<T, GeneralLbMember>) {
          return 0.0;
        } else {
          return sale_of(f, price);
        }
      },
      family_);
}

double Distribution::value_at_quantile(double q) const {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw ValidationError("value_at_quantile: quantile must lie in [0, 1]");
  }
  if (discrete()) {
    const auto a = atoms();
    return q == 0.0 ? a.back().value : discrete_value(a, q);
  }
  if (q == 0.0 && bounded_above()) return support_max();
  return std::visit(
      [&](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, PointMass> || std::is_same_v<T, GeneralLbMember>) {
          return 0.0;
        } else {
          return value_of(f, q);
        }
      },
      family_);
}

double Distribution::support_min() const {
  if (discrete()) return atoms().front().value;
  return std::visit(
      [](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, PointMass> || std::is_same_v<T, GeneralLbMember>) {
          return 0.0;
        } else {
          return smin_of(f);
        }
      },
      family_);
}

double Distribution::support_max() const {
  if (discrete()) return atoms().back().value;
  return std::visit(
      [](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, PointMass> || std::is_same_v<T, GeneralLbMember>) {
          return 0.0;
        } else {
          return smax_of(f);
        }
      },
      family_);
}

bool Distribution::bounded_above() const { return std::isfinite(support_max()); }

std::vector<double> Distribution::breakpoints() const {
  return std::visit(Overloaded{
                        [](const TruncatedExponential&) { return std::vector<double>{1.0}; },
                        [](const RegularLbMember& d) {
                          return d.which == 2 ? std::vector<double>{regular_tail(d).t} : std::vector<double>{};
                        },
                        [](const MhrLbMember& d) {
                          return d.which == 2 ? std::vector<double>{mhr_steps(d).knot} : std::vector<double>{};
                        },
                        [this](const auto&) {
                          std::vector<double> out;
                          if (discrete()) {
                            for (const Atom& a : atoms()) out.push_back(a.value);
                          }
                          return out;
                        },
                    },
                    family_);
}

bool Distribution::declared_mhr() const {
  return std::visit(Overloaded{
                        [](const Exponential&) { return true; },
                        [](const UniformInterval&) { return true; },
                        [](const TruncatedExponential&) { return true; },
                        [](const MhrLbMember&) { return true; },
                        [](const GeneralizedPareto& d) { return d.shape == 0.0; },
                        [](const auto&) { return false; },
                    },
                    family_);
}

std::optional<double> Distribution::declared_strong_regularity() const {
  if (discrete()) return std::nullopt;
  if (declared_mhr()) return 1.0;
  if (const auto* gp = std::get_if<GeneralizedPareto>(&family_)) return 1.0 - gp->shape;
  return 0.0;
}

// ---------------------------------------------------------------------------

SampleBatch::SampleBatch(std::vector<double> values, std::uint64_t source_seed)
    : values_(std::move(values)), source_seed_(source_seed) {
  if (values_.empty()) throw ValidationError("sample batch must hold at least one value");
  for (double v : values_) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw ValidationError("sample values must be finite and nonnegative");
  }
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

void draw_sorted(const Distribution& d, CounterRng& rng, std::span<double> out) {
  for (double& v : out) v = d.value_at_quantile(rng.uniform());
  std::sort(out.begin(), out.end(), std::greater<>());
}

SampleBatch sample(const Distribution& d, std::uint64_t seed, std::size_t m) {
  if (m == 0) throw ValidationError("sample: m must be >= 1");
  CounterRng rng(seed, 0);
  std::vector<double> values(m);
  draw_sorted(d, rng, values);
  return SampleBatch(std::move(values), seed);
}

SampleBatch sample_mixture_two_stage(const ExpMixture& mix, std::uint64_t seed, std::size_t m) {
  if (m == 0) throw ValidationError("sample: m must be >= 1");
  Distribution checked{mix};
  CounterRng rng(seed, 0);
  std::vector<double> values(m);
  for (double& v : values) {
    const double lambda = -std::log(rng.uniform()) / mix.gamma;
    v = -std::log(rng.uniform()) / lambda;
  }
  return SampleBatch(std::move(values), seed);
}

}  // namespace reserve_lab
