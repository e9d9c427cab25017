#pragma once
// Small statistical helpers shared by the unit tests.

#include <cmath>
#include <cstdint>
#include <span>

#include <boost/math/distributions/chi_squared.hpp>

namespace testutil {

// |observed - expected| within k standard errors of a binomial proportion.
inline bool within_sigma(std::int64_t hits, std::int64_t trials, double p, double k = 3.0) {
  const double n = static_cast<double>(trials);
  const double sigma = std::sqrt(p * (1.0 - p) / n);
  return std::abs(static_cast<double>(hits) / n - p) <= k * sigma;
}

inline double chi_square_pvalue(std::span<const std::int64_t> observed, std::span<const double> probs) {
  double total = 0.0;
  for (auto o : observed) total += static_cast<double>(o);
  double chi2 = 0.0;
  std::size_t dof = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    const double e = total * probs[i];
    const double d = static_cast<double>(observed[i]) - e;
    chi2 += d * d / e;
    ++dof;
  }
  boost::math::chi_squared_distribution<double> dist(static_cast<double>(dof - 1));
  return boost::math::cdf(boost::math::complement(dist, chi2));
}

inline double rel_err(double a, double b) {
  if (a == b) return 0.0;
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace testutil
