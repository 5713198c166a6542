#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "reserve_lab/info.hpp"
#include "reserve_lab/kernels.hpp"
#include "reserve_lab/rng.hpp"

namespace reserve_lab::kernels {
namespace {

TEST(Rng, OpenUnitInterval) {
  CounterRng rng(0, 0);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
  CounterRng a(5, 9), b(5, 9), c(5, 10);
  EXPECT_EQ(a.next_u64(), b.next_u64());
  EXPECT_NE(CounterRng(5, 9).next_u64(), c.next_u64());
}

TEST(RevenueKernel, ParallelMatchesSerialBitForBit) {
  const auto d = Distribution::exponential(1.0);
  for (const auto& s : {PricingStrategy::guarded(0.36787944117144233), PricingStrategy::empirical_reserve(),
                        PricingStrategy::identity()}) {
    const std::size_t m = s.single_sample() ? 1 : 25;
    std::vector<double> serial(5000), par(5000);
    revenue_trials_serial(d, s, m, 31, serial);
    for (int threads : {1, 2, 4, 7}) {
      revenue_trials_parallel(d, s, m, 31, par, threads);
      EXPECT_EQ(serial, par) << threads;
    }
  }
}

TEST(ClassifyKernel, ParallelMatchesSerialBitForBit) {
  const auto pair = info::make_lb_pair(info::PairKind::Regular, {0.05, 0.1, std::nullopt});
  std::vector<unsigned char> serial(4000), par(4000);
  classify_trials_serial(pair.d1, pair.d2, 8, 3, serial);
  for (int threads : {1, 3, 6}) {
    classify_trials_parallel(pair.d1, pair.d2, 8, 3, par, threads);
    EXPECT_EQ(serial, par);
  }
}

TEST(Moments, ShiftedMeanAndUnbiasedVariance) {
  const std::vector<double> xs{1e9 + 1, 1e9 + 2, 1e9 + 3, 1e9 + 4};
  const auto m = moments(xs);
  EXPECT_NEAR(m.mean, 1e9 + 2.5, 1e-6);
  EXPECT_NEAR(m.variance, 5.0 / 3.0, 1e-9);
  EXPECT_EQ(moments(std::vector<double>{2.0}).variance, 0.0);
  EXPECT_GE(default_threads(), 1);
}

}  // namespace
}  // namespace reserve_lab::kernels
