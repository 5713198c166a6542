#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "reserve_lab/curve.hpp"
#include "reserve_lab/errors.hpp"
#include "reserve_lab/eval.hpp"
#include "reserve_lab/kernels.hpp"
#include "suites.hpp"

namespace reserve_lab::eval {
namespace {

constexpr double kE = std::numbers::e;

double exp_scaled_ratio(double c) { return kE * c / ((c + 1.0) * (c + 1.0)); }

TEST(EvalStrategy, IdentityOnExponential) {
  const auto r = eval_strategy(Distribution::exponential(1.0), PricingStrategy::identity(), 1, Benchmark::monopoly(),
                               1, 0);
  EXPECT_NEAR(r.ratio, kE / 4.0, 1e-6);
  EXPECT_EQ(r.method, Method::Quadrature);
  EXPECT_EQ(r.ci95, 0.0);
  EXPECT_NEAR(r.revenue, r.ratio * r.benchmark, 1e-9);
}

TEST(EvalStrategy, ScaledOnExponentialMatchesClosedForm) {
  for (double c : {0.1, 0.5, 0.85, 1.0}) {
    for (double rate : {1.0, 3.0}) {
      const auto r = eval_strategy(Distribution::exponential(rate), PricingStrategy::scaled(c), 1,
                                   Benchmark::monopoly(), 1, 0);
      EXPECT_NEAR(r.ratio, exp_scaled_ratio(c), 1e-6) << c;
    }
  }
}

TEST(EvalStrategy, IdentityOnNarrowUniform) {
  double prev = 1.0;
  for (double eps : {0.1, 0.01, 0.001}) {
    const auto r = eval_strategy(Distribution::uniform(1.0 - eps, 1.0), PricingStrategy::identity(), 1,
                                 Benchmark::monopoly(), 1, 0);
    EXPECT_NEAR(r.revenue, 0.5 - eps / 3.0, 1e-6);
    EXPECT_NEAR(r.ratio, (0.5 - eps / 3.0) / (1.0 - eps), 1e-6);
    EXPECT_LT(r.ratio, prev);
    prev = r.ratio;
  }
}

TEST(EvalStrategy, EqualRevenueUsesTheSupremum) {
  const auto r = eval_strategy(Distribution::equal_revenue(), PricingStrategy::fixed(3.0), 5, Benchmark::monopoly(),
                               10, 0);
  EXPECT_TRUE(r.benchmark_is_supremum);
  EXPECT_NEAR(r.benchmark, 1.0, 1e-12);
  EXPECT_NEAR(r.ratio, 0.75, 1e-12);
  const auto restricted = eval_strategy(Distribution::equal_revenue(), PricingStrategy::fixed(3.0), 5,
                                        Benchmark::restricted(0.1), 10, 0);
  EXPECT_FALSE(restricted.benchmark_is_supremum);
  EXPECT_NEAR(restricted.ratio, 0.75 / 0.9, 1e-9);
}

TEST(EvalStrategy, FixedPriceHasZeroVariance) {
  for (const auto& d : {Distribution::exponential(1.0), Distribution::truncated_exponential(0.43, 0.74),
                        Distribution(GeneralLbMember{0.1, 0.05, 1})}) {
    const auto r = eval_strategy(d, PricingStrategy::fixed(1.3), 4, Benchmark::monopoly(), 1000, 3);
    EXPECT_EQ(r.method, Method::MonteCarlo);
    EXPECT_EQ(r.revenue, expected_revenue_of_price(d, 1.3));
    EXPECT_EQ(r.ci95, 0.0);
  }
}

TEST(EvalStrategy, MonteCarloAgreesWithQuadrature) {
  const auto d = Distribution::exponential(1.0);
  std::vector<double> out(1000000);
  kernels::revenue_trials_parallel(d, PricingStrategy::identity(), 1, 5, out);
  const auto mom = kernels::moments(out);
  const double ci = 1.96 * std::sqrt(mom.variance / out.size());
  const double quad = single_sample_revenue(d, PricingStrategy::identity());
  EXPECT_NEAR(quad, kE / 4.0 * std::exp(-1.0), 1e-9);
  EXPECT_NEAR(mom.mean, quad, ci);
}

TEST(EvalStrategy, SingleSampleOnDiscreteFamilies) {
  // PointMass(1): Scaled(c) posts c and sells with certainty.
  for (double c : {0.2, 0.6, 1.0}) {
    const auto r = eval_strategy(Distribution::point_mass(1.0), PricingStrategy::scaled(c), 1,
                                 Benchmark::monopoly(), 1, 0);
    EXPECT_NEAR(r.ratio, c, 1e-15);
  }
  // Identity on the general member: sum over atoms of mass * value * Pr[V >= value].
  const auto d = Distribution(GeneralLbMember{0.1, 0.05, 1});
  const double oracle = 0.8 * 1.0 * 1.0 + 0.085 * 2.0 * 0.2 + 0.115 * 10.0 * 0.115;
  EXPECT_NEAR(single_sample_revenue(d, PricingStrategy::identity()), oracle, 1e-14);
}

TEST(EvalStrategy, MonteCarloIsThreadInvariant) {
  const auto d = Distribution::truncated_exponential(0.43, 0.74);
  const auto s = PricingStrategy::guarded(0.3);
  const auto base = eval_strategy(d, s, 17, Benchmark::monopoly(), 20000, 99, 1);
  for (int threads : {2, 3, 8}) {
    const auto r = eval_strategy(d, s, 17, Benchmark::monopoly(), 20000, 99, threads);
    EXPECT_EQ(r.revenue, base.revenue);
    EXPECT_EQ(r.ci95, base.ci95);
  }
  const auto serial = eval_strategy_serial(d, s, 17, Benchmark::monopoly(), 20000, 99);
  EXPECT_EQ(serial.revenue, base.revenue);
  EXPECT_EQ(serial.ci95, base.ci95);
  EXPECT_NE(eval_strategy(d, s, 17, Benchmark::monopoly(), 20000, 100, 1).revenue, base.revenue);
}

TEST(EvalStrategy, RejectsBadArguments) {
  const auto d = Distribution::exponential(1.0);
  EXPECT_THROW(eval_strategy(d, PricingStrategy::identity(), 2, Benchmark::monopoly(), 10, 0), ValidationError);
  EXPECT_THROW(eval_strategy(d, PricingStrategy::guarded(0.5), 0, Benchmark::monopoly(), 10, 0), ValidationError);
  EXPECT_THROW(eval_strategy(d, PricingStrategy::guarded(0.5), 3, Benchmark::monopoly(), 0, 0), ValidationError);
}

TEST(ScaledRatioCurve, Examples) {
  const std::vector<double> grid{0.0, 0.5, 0.878, 1.0};
  const auto e = scaled_ratio_curve(Distribution::exponential(1.0), grid);
  ASSERT_EQ(e.size(), 4u);
  EXPECT_EQ(e[0].second, 0.0);
  EXPECT_NEAR(e[3].second, kE / 4.0, 1e-6);
  const auto t = scaled_ratio_curve(Distribution::truncated_exponential(0.43, 0.74), grid);
  EXPECT_LE(t[2].second, 0.677);
  EXPECT_NEAR(t[2].second, 0.6762, 1e-3);
}

TEST(ScaledRatioCurve, MhrSuiteStaysAboveTheGuarantee) {
  for (const auto& inst : testing::mhr_suite(false)) {
    const double c = 0.85;
    const auto r = scaled_ratio_curve(inst.d, std::vector<double>{c});
    EXPECT_GE(r[0].second, 0.589 - 1e-3) << inst.label;
  }
}

TEST(ScaledRatioCurve, AdversaryCapsEveryFactor) {
  std::vector<double> grid;
  for (int i = 0; i <= 100; ++i) grid.push_back(i / 100.0);
  const auto e = scaled_ratio_curve(Distribution::exponential(1.0), grid);
  const auto t = scaled_ratio_curve(Distribution::truncated_exponential(0.43, 0.74), grid);
  for (std::size_t i = 0; i < grid.size(); ++i)
    EXPECT_LE(std::min(e[i].second, t[i].second), 0.677 + 1e-3) << grid[i];
}

TEST(Sweep, PointMassNeedsOneSample) {
  SweepSpec spec{{0.2, 0.1, 0.05}, {2000}, 0, 1024, 0};
  const auto r = sweep_sample_complexity(Distribution::point_mass(1.0), PricingStrategy::empirical_reserve(),
                                         Benchmark::monopoly(), spec);
  ASSERT_EQ(r.rows.size(), 3u);
  for (const auto& row : r.rows) {
    EXPECT_EQ(row.m_found, 1u);
    EXPECT_EQ(row.m_smoothed, 1u);
  }
}

TEST(Sweep, GuardedExponentialImprovesWithMoreSamples) {
  const auto d = Distribution::exponential(1.0);
  const auto s = PricingStrategy::guarded(1.0 / kE);
  SweepSpec spec{{0.1}, {50000}, 1, 1 << 14, 0};
  const auto r = sweep_sample_complexity(d, s, Benchmark::monopoly(), spec);
  ASSERT_EQ(r.rows.size(), 1u);
  const std::size_t m = r.rows[0].m_found;
  EXPECT_GE(r.rows[0].ratio_at_m - r.rows[0].ci95_at_m, 0.9);
  const auto at_m = eval_strategy(d, s, m, Benchmark::monopoly(), 50000, 1);
  const auto at_4m = eval_strategy(d, s, 4 * m, Benchmark::monopoly(), 50000, 1);
  EXPECT_GT(at_4m.ratio, at_m.ratio);
}

TEST(Sweep, EqualRevenueRestrictedBenchmarkIsFinite) {
  SweepSpec spec{{0.1}, {20000}, 3, 1 << 14, 0};
  const auto r = sweep_sample_complexity(Distribution::equal_revenue(), PricingStrategy::guarded(0.05),
                                         Benchmark::restricted(0.1), spec);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_GE(r.rows[0].m_found, 1u);
  EXPECT_LE(r.rows[0].m_found, std::size_t{1} << 14);
}

TEST(Sweep, SmoothedSequenceIsMonotone) {
  SweepSpec spec{{0.05, 0.2, 0.1}, {20000}, 2, 1 << 12, 0};
  const auto r = sweep_sample_complexity(Distribution::uniform(0.0, 1.0), PricingStrategy::empirical_reserve(),
                                         Benchmark::monopoly(), spec);
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_EQ(r.rows[0].epsilon, 0.2);
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    EXPECT_GE(r.rows[i].m_smoothed, r.rows[i - 1].m_smoothed);
    EXPECT_GE(r.rows[i].m_smoothed, r.rows[i].m_found);
  }
}

TEST(Sweep, InsufficientTrials) {
  SweepSpec spec{{0.01}, {20}, 0, 1 << 10, 0};
  try {
    sweep_sample_complexity(Distribution::exponential(1.0), PricingStrategy::guarded(0.5), Benchmark::monopoly(),
                            spec);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("insufficient trials"), std::string::npos);
  }
}

TEST(LogLogSlope, RecoversAPowerLaw) {
  const std::vector<double> eps{0.2, 0.1, 0.05, 0.02};
  std::vector<double> m;
  for (double e : eps) m.push_back(3.0 * std::pow(e, -1.5));
  EXPECT_NEAR(log_log_slope(eps, m), -1.5, 1e-12);
  EXPECT_TRUE(std::isnan(log_log_slope(std::vector<double>{0.1}, std::vector<double>{4.0})));
}

double identity_mixture_oracle(double v_max) {
  return 0.25 * (std::log(2.0 * v_max + 1.0) + 1.0 / (2.0 * v_max + 1.0) - 1.0);
}

TEST(MixtureObjective, IdentityGrowsLogarithmically) {
  for (double v_max : {10.0, 1000.0}) {
    const auto f = mixture_objective([](double v) { return v; }, v_max, 1.0);
    EXPECT_NEAR(f, identity_mixture_oracle(v_max), 1e-9);
    const std::vector<double> grid{0.0, v_max};
    EXPECT_NEAR(mixture_objective(grid, grid, 1.0), identity_mixture_oracle(v_max), 1e-9);
  }
}

TEST(MixtureObjective, ZeroPriceEarnsNothing) {
  EXPECT_EQ(mixture_objective([](double) { return 0.0; }, 50.0, 2.0), 0.0);
}

TEST(MixtureObjective, IdentityDominatesEveryAdmissiblePrice) {
  std::vector<double> grid;
  for (int i = 0; i <= 200; ++i) grid.push_back(0.25 * i);
  for (double gamma : {0.5, 1.0, 3.0}) {
    const double top = mixture_objective(grid, grid, gamma);
    for (double c : {0.2, 0.5, 0.9}) {
      std::vector<double> p;
      for (double v : grid) p.push_back(c * v);
      EXPECT_LE(mixture_objective(grid, p, gamma), top);
    }
    std::vector<double> capped;
    for (double v : grid) capped.push_back(std::min(v, 1.0));
    EXPECT_LE(mixture_objective(grid, capped, gamma), top);
  }
}

TEST(MixtureObjective, RejectsPricesAboveValue) {
  const std::vector<double> grid{0.0, 1.0, 2.0};
  const std::vector<double> p{0.0, 1.5, 1.0};
  try {
    mixture_objective(grid, p, 1.0);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("best-response domain violated"), std::string::npos);
  }
  EXPECT_THROW(mixture_objective([](double v) { return 2.0 * v; }, 5.0, 1.0), ValidationError);
}

}  // namespace
}  // namespace reserve_lab::eval
