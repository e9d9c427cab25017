#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace muteqkd {

/// Random engine used throughout the simulator. Every worker owns its own
/// instance; streams are derived from a run seed with derive_seed().
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits of one engine draw.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t splitmix64(std::uint64_t x);

/// Independent, reproducible stream seed for (run seed, stream index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

inline constexpr std::int64_t kNever = std::numeric_limits<std::int64_t>::max();

/// Number of Bernoulli(p) trials up to and including the first success.
/// Returns kNever when p == 0.
std::int64_t geometric_trials(Rng& rng, double p);

std::int64_t poisson(Rng& rng, double mean);
std::int64_t binomial(Rng& rng, std::int64_t trials, double p);

}  // namespace muteqkd
