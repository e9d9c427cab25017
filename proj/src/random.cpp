#include "muteqkd/random.hpp"

#include <cmath>

namespace muteqkd {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

std::int64_t geometric_trials(Rng& rng, double p) {
  if (p <= 0.0) return kNever;
  if (p >= 1.0) return 1;
  const double u = 1.0 - uniform01(rng);  // (0, 1]
  const double trials = std::floor(std::log(u) / std::log1p(-p)) + 1.0;
  if (trials >= 9.0e18) return kNever;
  return static_cast<std::int64_t>(trials);
}

std::int64_t poisson(Rng& rng, double mean) {
  if (mean <= 0.0) return 0;
  if (mean < 30.0) {
    // Inversion; exact and cheap for the weak pulses that dominate sessions.
    double term = std::exp(-mean);
    double cdf = term;
    const double u = uniform01(rng);
    std::int64_t k = 0;
    while (u >= cdf) {
      ++k;
      term *= mean / static_cast<double>(k);
      cdf += term;
      if (term < 1e-300 && cdf < u) break;
    }
    return k;
  }
  std::poisson_distribution<std::int64_t> dist(mean);
  return dist(rng);
}

std::int64_t binomial(Rng& rng, std::int64_t trials, double p) {
  if (trials <= 0 || p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  if (trials == 1) return uniform01(rng) < p ? 1 : 0;
  std::binomial_distribution<std::int64_t> dist(trials, p);
  return dist(rng);
}

}  // namespace muteqkd
