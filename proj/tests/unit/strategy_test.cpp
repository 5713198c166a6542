#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "reserve_lab/errors.hpp"
#include "reserve_lab/strategy.hpp"

namespace reserve_lab {
namespace {

double post(const PricingStrategy& s, std::vector<double> desc) { return post_price(s, desc); }

TEST(PostPrice, Examples) {
  EXPECT_EQ(post(PricingStrategy::empirical_reserve(), {3, 2, 1}), 2.0);
  EXPECT_EQ(post(PricingStrategy::empirical_reserve(), {2, 2, 2}), 2.0);
  EXPECT_EQ(post(PricingStrategy::guarded(0.5), {10, 1, 1, 1}), 1.0);
  EXPECT_EQ(post(PricingStrategy::empirical_reserve(), {10, 1, 1, 1}), 10.0);
  EXPECT_EQ(post(PricingStrategy::identity(), {4.5}), 4.5);
  EXPECT_EQ(post(PricingStrategy::scaled(0.5), {4.5}), 2.25);
  EXPECT_EQ(post(PricingStrategy::fixed(7.0), {1, 1}), 7.0);
}

TEST(PostPrice, TiesGoToTheLargerPrice) {
  // Products 4 and 4: i = 1 and i = 2.
  EXPECT_EQ(post(PricingStrategy::empirical_reserve(), {4, 2, 1}), 4.0);
  EXPECT_EQ(empirical_reserve_index(std::vector<double>{4, 2, 1}), 1u);
  EXPECT_EQ(empirical_reserve_index(std::vector<double>{3, 2, 1}), 2u);
}

TEST(PostPrice, Errors) {
  EXPECT_THROW(post(PricingStrategy::empirical_reserve(), {}), ValidationError);
  EXPECT_THROW(post(PricingStrategy::identity(), {2, 1}), ValidationError);
  EXPECT_THROW(post(PricingStrategy::scaled(0.5), {2, 1}), ValidationError);
  EXPECT_THROW(PricingStrategy::guarded(0.0).validate(), ValidationError);
  EXPECT_THROW(PricingStrategy::guarded(1.5).validate(), ValidationError);
  EXPECT_THROW(PricingStrategy::scaled(-0.1).validate(), ValidationError);
  EXPECT_THROW(PricingStrategy::fixed(-1.0).validate(), ValidationError);
  EXPECT_NO_THROW(PricingStrategy::guarded(1.0).validate());
}

TEST(GuardIndex, CeilingWithFloorOfOne) {
  EXPECT_EQ(guard_index(0.5, 4), 2u);
  EXPECT_EQ(guard_index(0.5, 5), 3u);
  EXPECT_EQ(guard_index(0.01, 10), 1u);
  EXPECT_EQ(guard_index(1.0, 7), 7u);
  EXPECT_EQ(guard_index(1.0 / std::exp(1.0), 100), 37u);
}

TEST(ExpectedRevenueOfPrice, Examples) {
  EXPECT_NEAR(expected_revenue_of_price(Distribution::exponential(1.0), 1.0), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(expected_revenue_of_price(Distribution::equal_revenue(), 3.0), 0.75, 1e-15);
  EXPECT_EQ(expected_revenue_of_price(Distribution::point_mass(5.0), 5.0), 5.0);
  EXPECT_EQ(expected_revenue_of_price(Distribution::point_mass(5.0), 5.01), 0.0);
  EXPECT_EQ(expected_revenue_of_price(Distribution::exponential(1.0), 0.0), 0.0);
}

// Samples with frequent ties: half the batches draw small integers.
std::vector<double> random_batch(std::mt19937_64& gen, std::size_t m) {
  std::vector<double> v(m);
  if (gen() % 2 == 0) {
    std::uniform_int_distribution<int> pick(1, 5);
    for (auto& x : v) x = pick(gen);
  } else {
    std::exponential_distribution<double> e(1.0);
    for (auto& x : v) x = e(gen);
  }
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

// Monopoly price of the uniform distribution on the batch: try every sample as
// a price, count the samples at or above it, keep the best, larger price on ties.
double brute_force_monopoly_price(const std::vector<double>& v) {
  double best_price = 0.0;
  double best_rev = -1.0;
  for (double p : v) {
    const auto sold = std::count_if(v.begin(), v.end(), [p](double x) { return x >= p; });
    const double rev = p * static_cast<double>(sold) / static_cast<double>(v.size());
    if (rev > best_rev || (rev == best_rev && p > best_price)) {
      best_rev = rev;
      best_price = p;
    }
  }
  return best_price;
}

TEST(EmpiricalReserve, MatchesBruteForceMonopolyOfTheEmpiricalDistribution) {
  std::mt19937_64 gen(42);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto v = random_batch(gen, 1 + trial % 8);
    ASSERT_EQ(post(PricingStrategy::empirical_reserve(), v), brute_force_monopoly_price(v)) << trial;
  }
}

TEST(EmpiricalReserve, ScaleCovariance) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto v = random_batch(gen, 1 + trial % 12);
    for (double t : {0.25, 0.5, 2.0, 8.0}) {
      std::vector<double> scaled(v);
      for (auto& x : scaled) x *= t;
      for (const auto& s : {PricingStrategy::empirical_reserve(), PricingStrategy::guarded(0.3),
                            PricingStrategy::guarded(1.0 / std::exp(1.0))})
        EXPECT_EQ(post(s, scaled), t * post(s, v));
      if (v.size() == 1) {
        EXPECT_EQ(post(PricingStrategy::identity(), scaled), t * post(PricingStrategy::identity(), v));
        EXPECT_EQ(post(PricingStrategy::scaled(0.75), scaled), t * post(PricingStrategy::scaled(0.75), v));
      }
    }
  }
}

TEST(EmpiricalReserve, GuardNeverPicksASmallerIndex) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 5000; ++trial) {
    const auto v = random_batch(gen, 1 + trial % 20);
    const std::size_t free_index = empirical_reserve_index(v);
    for (double c : {0.1, 0.37, 0.5, 0.9}) {
      const std::size_t g = empirical_reserve_index(v, guard_index(c, v.size()));
      EXPECT_GE(g, free_index);
      EXPECT_LE(post(PricingStrategy::guarded(c), v), post(PricingStrategy::empirical_reserve(), v));
    }
  }
}

TEST(StrategyNames, RoundTrip) {
  for (auto k : {StrategyKind::EmpiricalReserve, StrategyKind::GuardedEmpiricalReserve, StrategyKind::Identity,
                 StrategyKind::Scaled, StrategyKind::Fixed}) {
    const PricingStrategy s{k, 0.5};
    EXPECT_EQ(strategy_kind_from_name(s.name()), k);
  }
  EXPECT_THROW(strategy_kind_from_name("bogus"), ValidationError);
  EXPECT_TRUE(PricingStrategy::identity().single_sample());
  EXPECT_FALSE(PricingStrategy::guarded(0.5).single_sample());
}

}  // namespace
}  // namespace reserve_lab
