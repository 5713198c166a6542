#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "reserve_lab/dist.hpp"
#include "reserve_lab/strategy.hpp"

// Monte-Carlo trial loops. Trial t draws everything from CounterRng(seed, t)
// and writes its own slot, so the serial and OpenMP versions fill identical
// buffers for any thread count.
namespace reserve_lab::kernels {

// out[t] = expected revenue of the price s posts on m fresh draws from d.
void revenue_trials_serial(const Distribution& d, const PricingStrategy& s, std::size_t m, std::uint64_t seed,
                           std::span<double> out);
void revenue_trials_parallel(const Distribution& d, const PricingStrategy& s, std::size_t m, std::uint64_t seed,
                             std::span<double> out, int threads = 0);

// out[t] = 1 when the likelihood-ratio test names the member that generated
// trial t's m draws. The member is chosen by a fair coin.
void classify_trials_serial(const Distribution& d1, const Distribution& d2, std::size_t m, std::uint64_t seed,
                            std::span<unsigned char> out);
void classify_trials_parallel(const Distribution& d1, const Distribution& d2, std::size_t m, std::uint64_t seed,
                              std::span<unsigned char> out, int threads = 0);

struct Moments {
  double mean;
  double variance;  // unbiased; 0 for a single value
};

// Serial, in index order.
Moments moments(std::span<const double> xs);

// Thread count used when `requested` <= 0.
int default_threads();

}  // namespace reserve_lab::kernels
