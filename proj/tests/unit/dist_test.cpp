#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "reserve_lab/curve.hpp"
#include "reserve_lab/dist.hpp"
#include "reserve_lab/errors.hpp"
#include "suites.hpp"

namespace reserve_lab {
namespace {

std::vector<Distribution> continuous_families() {
  return {Distribution::exponential(1.0),
          Distribution::exponential(3.5),
          Distribution::uniform(0.0, 1.0),
          Distribution::uniform(2.0, 5.0),
          Distribution::equal_revenue(),
          Distribution::generalized_pareto(0.0, 2.0),
          Distribution::generalized_pareto(0.5, 1.0),
          Distribution::truncated_exponential(0.43, 0.74),
          Distribution::truncated_exponential(0.2, 2.0),
          Distribution(RegularLbMember{0.15, 1}),
          Distribution(RegularLbMember{0.15, 2}),
          Distribution(RegularLbMember{0.06, 2}),
          Distribution(MhrLbMember{0.04, 1}),
          Distribution(MhrLbMember{0.04, 2}),
          Distribution::exp_mixture(1.0),
          Distribution::exp_mixture(0.3)};
}

std::vector<Distribution> discrete_families() {
  return {Distribution::point_mass(3.0), Distribution(GeneralLbMember{0.1, 0.05, 1}),
          Distribution(GeneralLbMember{0.1, 0.05, 2}), Distribution(GeneralLbMember{0.25, 0.1, 1})};
}

TEST(Cdf, Examples) {
  EXPECT_EQ(Distribution::exponential(1.0).cdf(0.0), 0.0);
  EXPECT_NEAR(Distribution::equal_revenue().cdf(1.0), 0.5, 1e-15);
  EXPECT_NEAR(Distribution(GeneralLbMember{0.1, 0.01, 1}).cdf(5.0), 0.897, 1e-12);
}

TEST(Cdf, ClosedFormsAgainstIndependentFormulas) {
  const auto e = Distribution::exponential(2.0);
  for (double v : {0.1, 0.7, 3.0}) EXPECT_NEAR(e.cdf(v), 1.0 - std::exp(-2.0 * v), 1e-15);
  const auto g = Distribution::generalized_pareto(0.5, 2.0);
  for (double v : {0.1, 1.0, 10.0}) EXPECT_NEAR(g.cdf(v), 1.0 - std::pow(1.0 + 0.5 * v / 2.0, -2.0), 1e-14);
  const auto mix = Distribution::exp_mixture(2.0);
  for (double v : {0.5, 4.0}) EXPECT_NEAR(mix.cdf(v), 1.0 - 2.0 / (2.0 + v), 1e-15);
  const auto r2 = Distribution(RegularLbMember{0.15, 2});
  const double tail = 0.7 * 0.7;
  EXPECT_NEAR(r2.cdf(1.0), 0.5, 1e-15);
  EXPECT_NEAR(r2.cdf(5.0), 1.0 - tail / (5.0 - 0.7), 1e-14);
}

TEST(Cdf, NondecreasingWithLimits) {
  for (const auto& d : continuous_families()) {
    SCOPED_TRACE(std::string(d.family_name()));
    const double lo = d.support_min();
    EXPECT_EQ(d.cdf(lo - 1e-9), 0.0);
    double prev = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      const double v = lo + 0.01 * i;
      const double f = d.cdf(v);
      EXPECT_GE(f, prev);
      EXPECT_LE(f, 1.0);
      prev = f;
    }
    EXPECT_GT(d.cdf(1e12), 1.0 - 1e-6);
  }
  for (const auto& d : discrete_families()) {
    const auto atoms = d.atoms();
    EXPECT_EQ(d.cdf(atoms.front().value - 1e-12), 0.0);
    EXPECT_NEAR(d.cdf(atoms.back().value), 1.0, 1e-15);
    // Right-continuous steps.
    for (const auto& a : atoms) EXPECT_NEAR(d.cdf(a.value) - d.cdf(a.value - 1e-9), a.mass, 1e-12);
  }
}

TEST(ValueAtQuantile, Examples) {
  EXPECT_NEAR(Distribution::exponential(1.0).value_at_quantile(std::exp(-1.0)), 1.0, 1e-15);
  EXPECT_NEAR(Distribution::equal_revenue().value_at_quantile(0.5), 1.0, 1e-15);
  EXPECT_NEAR(Distribution::truncated_exponential(0.43, 0.74).value_at_quantile(0.215), 1.37, 1e-12);
}

TEST(ValueAtQuantile, ZeroQuantile) {
  EXPECT_THROW(Distribution::equal_revenue().value_at_quantile(0.0), UnboundedValue);
  EXPECT_THROW(Distribution::exponential(1.0).value_at_quantile(0.0), UnboundedValue);
  EXPECT_THROW(Distribution::exp_mixture(1.0).value_at_quantile(0.0), UnboundedValue);
  EXPECT_EQ(Distribution::uniform(1.0, 2.0).value_at_quantile(0.0), 2.0);
  EXPECT_NEAR(Distribution::truncated_exponential(0.43, 0.74).value_at_quantile(0.0), 1.74, 1e-15);
}

TEST(ValueAtQuantile, InverseConsistencyContinuous) {
  for (const auto& d : continuous_families()) {
    SCOPED_TRACE(std::string(d.family_name()));
    for (int i = 1; i < 1000; ++i) {
      const double q = i * 1e-3;
      EXPECT_NEAR(d.quantile_of_value(d.value_at_quantile(q)), q, 1e-9);
    }
  }
}

TEST(ValueAtQuantile, InverseConsistencyDiscreteIntervalMembership) {
  for (const auto& d : discrete_families()) {
    for (int i = 1; i <= 1000; ++i) {
      const double q = i * 1e-3;
      const double v = d.value_at_quantile(q);
      // q lies in (Pr[V > v], Pr[V >= v]].
      EXPECT_GE(d.sale_probability(v) + 1e-12, q);
      EXPECT_LT(d.quantile_of_value(v), q + 1e-12);
    }
  }
}

TEST(ValueAtQuantile, DiscreteTiesGoToTheHigherValue) {
  const auto d = Distribution(GeneralLbMember{0.1, 0.05, 1});
  EXPECT_EQ(d.value_at_quantile(d.sale_probability(10.0)), 10.0);
  EXPECT_EQ(d.value_at_quantile(d.sale_probability(2.0)), 2.0);
  EXPECT_EQ(d.value_at_quantile(0.2000001), 1.0);
  EXPECT_EQ(d.value_at_quantile(0.1), 10.0);
  EXPECT_EQ(Distribution::point_mass(3.0).value_at_quantile(1.0), 3.0);
}

TEST(Pdf, IntegratesToCdf) {
  for (const auto& d : continuous_families()) {
    SCOPED_TRACE(std::string(d.family_name()));
    const double lo = d.support_min();
    const double hi = d.value_at_quantile(0.02);
    std::vector<double> cuts{lo};
    for (double b : d.breakpoints())
      if (b > lo && b < hi) cuts.push_back(b);
    cuts.push_back(hi);
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const int n = 20000;
      const double h = (cuts[k + 1] - cuts[k]) / n;
      for (int i = 0; i < n; ++i) total += *d.pdf(cuts[k] + (i + 0.5) * h) * h;
    }
    EXPECT_NEAR(total, d.cdf(hi) - d.cdf(lo), 1e-6);
  }
  EXPECT_FALSE(Distribution::point_mass(1.0).pdf(1.0).has_value());
}

TEST(LowerBoundMembers, GeneralMassTable) {
  const auto d1 = Distribution(GeneralLbMember{0.1, 0.05, 1});
  const auto d2 = Distribution(GeneralLbMember{0.1, 0.05, 2});
  const auto a1 = d1.atoms();
  const auto a2 = d2.atoms();
  ASSERT_EQ(a1.size(), 3u);
  ASSERT_EQ(a2.size(), 3u);
  const double values[] = {1.0, 2.0, 10.0};
  const double m1[] = {0.8, 0.085, 0.115};
  const double m2[] = {0.8, 0.115, 0.085};
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(a1[i].value, values[i]);
    EXPECT_NEAR(a1[i].mass, m1[i], 1e-15);
    EXPECT_NEAR(a2[i].mass, m2[i], 1e-15);
  }
}

TEST(LowerBoundMembers, RegularBreakpoint) {
  const auto d2 = Distribution(RegularLbMember{0.15, 2});
  const auto bp = d2.breakpoints();
  ASSERT_EQ(bp.size(), 1u);
  EXPECT_NEAR(bp[0], 7.0 / 3.0, 1e-14);
  // Identical to the equal-revenue member below the breakpoint.
  const auto er = Distribution::equal_revenue();
  for (double v : {0.0, 0.5, 1.0, 2.0, 2.33}) EXPECT_EQ(d2.cdf(v), er.cdf(v));
  EXPECT_EQ(Distribution(RegularLbMember{0.15, 1}), Distribution(RegularLbMember{0.15, 1}));
}

TEST(LowerBoundMembers, MhrStepDensity) {
  const auto d2 = Distribution(MhrLbMember{0.04, 2});
  EXPECT_NEAR(*d2.pdf(1.1), 0.6, 1e-15);
  EXPECT_NEAR(*d2.pdf(1.5), 1.1, 1e-15);
  EXPECT_NEAR(*d2.pdf(1.99), 1.1, 1e-15);
  EXPECT_EQ(*Distribution(MhrLbMember{0.04, 1}).pdf(1.5), 1.0);
}

TEST(LowerBoundMembers, MhrDensityMassIdentity) {
  for (double e0 : {0.001, 0.01, 0.04, 0.1, 0.2, 0.24}) {
    const double s = std::sqrt(e0);
    const double mass = (1.0 - 2.0 * s) * s + (1.0 + 2.0 * e0 / (1.0 - s)) * (1.0 - s);
    EXPECT_NEAR(mass, 1.0, 1e-12);
    EXPECT_NEAR(Distribution(MhrLbMember{e0, 2}).cdf(2.0), 1.0, 1e-12);
  }
}

TEST(Validation, RejectsOutOfRangeParameters) {
  EXPECT_THROW(Distribution::exponential(0.0), ValidationError);
  EXPECT_THROW(Distribution::uniform(1.0, 1.0), ValidationError);
  EXPECT_THROW(Distribution::point_mass(0.0), ValidationError);
  EXPECT_THROW(Distribution::generalized_pareto(1.0, 1.0), ValidationError);
  EXPECT_THROW(Distribution::generalized_pareto(-0.1, 1.0), ValidationError);
  EXPECT_THROW(Distribution::truncated_exponential(1.0, 0.5), ValidationError);
  EXPECT_THROW(Distribution::truncated_exponential(0.5, 0.0), ValidationError);
  EXPECT_THROW(Distribution(GeneralLbMember{0.1, 1.0 / 6.0, 1}), ValidationError);
  EXPECT_THROW(Distribution(GeneralLbMember{0.1, 0.05, 3}), ValidationError);
  EXPECT_THROW(Distribution(GeneralLbMember{0.6, 0.05, 1}), ValidationError);
  EXPECT_THROW(Distribution(RegularLbMember{0.5, 1}), ValidationError);
  EXPECT_THROW(Distribution(MhrLbMember{0.25, 2}), ValidationError);
  EXPECT_THROW(Distribution::exp_mixture(-1.0), ValidationError);
  EXPECT_THROW(Distribution::exponential(std::nan("")), ValidationError);
}

TEST(Sample, PointMassIsConstant) {
  const auto batch = sample(Distribution::point_mass(3.0), 12345, 4);
  ASSERT_EQ(batch.size(), 4u);
  for (double v : batch.values()) EXPECT_EQ(v, 3.0);
}

TEST(Sample, DeterministicAndSortedDescending) {
  const auto d = Distribution::exponential(1.0);
  const auto a = sample(d, 77, 2);
  const auto b = sample(d, 77, 2);
  EXPECT_EQ(a[0], b[0]);
  EXPECT_EQ(a[1], b[1]);
  EXPECT_GE(a[0], a[1]);
  EXPECT_GT(a[1], 0.0);
  const auto big = sample(Distribution::truncated_exponential(0.43, 0.74), 5, 1000);
  EXPECT_TRUE(std::is_sorted(big.values().begin(), big.values().end(), std::greater<>()));
  EXPECT_EQ(big.source_seed(), 5u);
  EXPECT_NE(sample(d, 78, 2)[0], a[0]);
}

TEST(Sample, UniformMean) {
  for (std::uint64_t seed : {0u, 1u, 2u, 3u}) {
    const auto batch = sample(Distribution::uniform(0.0, 1.0), seed, 100000);
    double s = 0.0;
    for (double v : batch.values()) s += v;
    EXPECT_NEAR(s / 100000.0, 0.5, 0.01);
  }
}

double ks_statistic(const Distribution& d, std::span<const double> desc) {
  std::vector<double> xs(desc.rbegin(), desc.rend());
  const double n = static_cast<double>(xs.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = d.cdf(xs[i]);
    worst = std::max({worst, (i + 1) / n - f, f - i / n});
  }
  return worst;
}

TEST(Sample, KolmogorovSmirnov) {
  for (const auto& d : continuous_families()) {
    SCOPED_TRACE(std::string(d.family_name()));
    const auto batch = sample(d, 2024, 100000);
    EXPECT_LT(ks_statistic(d, batch.values()), 0.01);
  }
}

TEST(Sample, MixtureTwoStageMatchesMarginal) {
  for (double gamma : {0.5, 1.0, 4.0}) {
    const auto two_stage = sample_mixture_two_stage(ExpMixture{gamma}, 9, 100000);
    EXPECT_LT(ks_statistic(Distribution::exp_mixture(gamma), two_stage.values()), 0.01);
  }
}

TEST(SampleBatchType, ValidatesContents) {
  EXPECT_THROW(SampleBatch({}, 0), ValidationError);
  EXPECT_THROW(SampleBatch({1.0, -2.0}, 0), ValidationError);
  const SampleBatch b({1.0, 3.0, 2.0}, 4);
  EXPECT_EQ(b[0], 3.0);
  EXPECT_EQ(b[2], 1.0);
}

TEST(DeclaredClasses, MhrFamiliesPassTheNumericalCheck) {
  for (const auto& inst : testing::mhr_suite(true)) {
    SCOPED_TRACE(inst.label);
    ASSERT_TRUE(inst.d.declared_mhr());
    EXPECT_TRUE(curve::class_check(inst.d, curve::ClassSpec::mhr()).pass);
  }
  EXPECT_FALSE(Distribution::equal_revenue().declared_mhr());
  EXPECT_EQ(Distribution::generalized_pareto(0.25, 1.0).declared_strong_regularity(), 0.75);
  EXPECT_FALSE(Distribution::point_mass(1.0).declared_strong_regularity().has_value());
}

TEST(DeclaredClasses, MhrPairRecordsTheUpwardHazardJump) {
  const auto report = curve::class_check(Distribution(MhrLbMember{0.04, 2}), curve::ClassSpec::mhr());
  EXPECT_TRUE(report.pass);
  ASSERT_EQ(report.hazard_jumps.size(), 1u);
  EXPECT_NEAR(report.hazard_jumps[0].value, 1.2, 1e-12);
  EXPECT_LT(report.hazard_jumps[0].left, report.hazard_jumps[0].right);
}

}  // namespace
}  // namespace reserve_lab
