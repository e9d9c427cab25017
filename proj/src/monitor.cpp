#include "muteqkd/monitor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

namespace muteqkd {

FilterRateResult filter_rate_test(std::int64_t wide_avalanches, double duration_s,
                                  double threshold_per_s) {
  if (!(duration_s > 0.0)) throw std::invalid_argument("filter rate test needs a positive duration");
  FilterRateResult r;
  r.rate = static_cast<double>(wide_avalanches) / duration_s;
  r.flag = r.rate > threshold_per_s;
  return r;
}

FilterRateResult filter_rate_test(std::span<const GateOutcome> outcomes, double duration_s,
                                  double threshold_per_s) {
  const auto n = std::count(outcomes.begin(), outcomes.end(), GateOutcome::muted_wide_avalanche);
  return filter_rate_test(static_cast<std::int64_t>(n), duration_s, threshold_per_s);
}

namespace {

struct PhaseStats {
  double pvalue = 1.0;
  double score = 0.0;
};

PhaseStats phase_stats(std::span<const ClickRecord> records, std::int64_t period) {
  const auto hist = click_phase_histogram(records, period);
  const double n = static_cast<double>(records.size());
  const double expected = n / static_cast<double>(period);
  double chi2 = 0.0;
  for (auto c : hist) {
    const double d = static_cast<double>(c) - expected;
    chi2 += d * d / expected;
  }
  PhaseStats s;
  if (period > 1) {
    boost::math::chi_squared_distribution<double> dist(static_cast<double>(period - 1));
    s.pvalue = boost::math::cdf(boost::math::complement(dist, chi2));
  }
  std::vector<std::int64_t> sorted(hist.begin(), hist.end());
  std::partial_sort(sorted.begin(), sorted.begin() + std::min<std::ptrdiff_t>(2, std::ssize(sorted)),
                    sorted.end(), std::greater<>());
  double top = static_cast<double>(sorted[0]);
  if (sorted.size() > 1) top += static_cast<double>(sorted[1]);
  s.score = n > 0.0 ? top / n : 0.0;
  return s;
}

}  // namespace

PeriodicityResult periodicity_test(std::span<const ClickRecord> records, std::int64_t period,
                                   const PeriodicityThresholds& th) {
  if (period < 1) throw std::invalid_argument("periodicity test needs period >= 1");
  PeriodicityResult r;
  r.period = period;
  r.clicks = static_cast<std::int64_t>(records.size());
  if (r.clicks < th.min_clicks) return r;
  const PhaseStats s = phase_stats(records, period);
  r.pvalue = s.pvalue;
  r.two_peak_score = s.score;
  r.flag = s.pvalue < th.pvalue && s.score > th.score;
  return r;
}

PeriodicityResult periodicity_scan(std::span<const ClickRecord> records, std::int64_t min_period,
                                   std::int64_t max_period, const PeriodicityThresholds& th) {
  if (min_period < 2 || max_period < min_period)
    throw std::invalid_argument("period scan needs 2 <= min <= max");
  PeriodicityResult best;
  best.clicks = static_cast<std::int64_t>(records.size());
  best.period = min_period;
  if (best.clicks < th.min_clicks) return best;
  const double candidates = static_cast<double>(max_period - min_period + 1);
  double best_p = 2.0;
  for (std::int64_t p = min_period; p <= max_period; ++p) {
    const PhaseStats s = phase_stats(records, p);
    if (s.pvalue < best_p) {
      best_p = s.pvalue;
      best.period = p;
      best.two_peak_score = s.score;
    }
  }
  best.pvalue = std::min(1.0, best_p * candidates);
  best.flag = *best.pvalue < th.pvalue && best.two_peak_score > th.score;
  return best;
}

double filter_threshold_from_baseline(double baseline_rate_per_s, double factor) {
  return factor * std::max(0.0, baseline_rate_per_s);
}

MonitorReport analyse(std::span<const ClickRecord> clicks,
                      std::span<const std::int64_t> wide_avalanches_per_detector, double duration_s,
                      std::int64_t signal_period_gates, const MonitorThresholds& th) {
  MonitorReport rep;
  rep.thresholds = th;
  for (auto w : wide_avalanches_per_detector) {
    const auto f = filter_rate_test(w, duration_s, th.filter_rate_per_s);
    rep.wide_avalanche_rate = std::max(rep.wide_avalanche_rate, f.rate);
    rep.filter_flag = rep.filter_flag || f.flag;
  }

  std::vector<ClickRecord> kept;
  kept.reserve(clicks.size());
  for (const auto& c : clicks)
    if (signal_period_gates <= 0 || c.gate % signal_period_gates != 0) kept.push_back(c);

  const PeriodicityResult p = th.period > 0 ? periodicity_test(kept, th.period, th.periodicity)
                                            : periodicity_scan(kept, 2, 100, th.periodicity);
  rep.phase_uniformity_pvalue = p.pvalue;
  rep.two_peak_score = p.two_peak_score;
  rep.period = p.period;
  rep.clicks_analysed = p.clicks;
  rep.periodicity_flag = p.flag;
  rep.alarm = rep.filter_flag || rep.periodicity_flag;
  return rep;
}

}  // namespace muteqkd
