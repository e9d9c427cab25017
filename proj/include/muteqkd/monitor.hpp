#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>

#include "muteqkd/spad.hpp"

namespace muteqkd {

struct FilterRateResult {
  double rate = 0.0;  // muted wide avalanches per second
  bool flag = false;
};

/// Rate of discriminator-filtered avalanches; flags when rate > threshold.
FilterRateResult filter_rate_test(std::span<const GateOutcome> outcomes, double duration_s,
                                  double threshold_per_s);
FilterRateResult filter_rate_test(std::int64_t wide_avalanches, double duration_s,
                                  double threshold_per_s);

struct PeriodicityResult {
  std::optional<double> pvalue;  // nullopt: too few clicks to test
  double two_peak_score = 0.0;
  std::int64_t period = 0;
  std::int64_t clicks = 0;
  bool flag = false;

  bool inconclusive() const { return !pvalue.has_value(); }
};

struct PeriodicityThresholds {
  double pvalue = 1e-6;
  double score = 0.5;
  std::int64_t min_clicks = 30;
};

/// Chi-square uniformity test of the click phases modulo `period`, plus the
/// share of clicks in the two fullest bins.
PeriodicityResult periodicity_test(std::span<const ClickRecord> records, std::int64_t period,
                                   const PeriodicityThresholds& thresholds = {});

/// Unknown period: test every period in [min_period, max_period] and keep the
/// smallest p-value, Bonferroni-corrected for the number of candidates.
PeriodicityResult periodicity_scan(std::span<const ClickRecord> records,
                                   std::int64_t min_period = 2, std::int64_t max_period = 100,
                                   const PeriodicityThresholds& thresholds = {});

struct MonitorThresholds {
  double filter_rate_per_s = 0.0;  // per detector
  PeriodicityThresholds periodicity;
  std::int64_t period = 0;         // 0 scans 2..100
};

struct MonitorReport {
  double wide_avalanche_rate = 0.0;  // highest per-detector rate
  std::optional<double> phase_uniformity_pvalue;
  double two_peak_score = 0.0;
  std::int64_t period = 0;
  std::int64_t clicks_analysed = 0;
  bool filter_flag = false;
  bool periodicity_flag = false;
  bool alarm = false;
  MonitorThresholds thresholds;
};

/// Runs both tests. Clicks on gates that are multiples of signal_period_gates
/// are dropped before the periodicity test when signal_period_gates > 0: those
/// carry Alice's photons and are periodic by construction.
MonitorReport analyse(std::span<const ClickRecord> clicks,
                      std::span<const std::int64_t> wide_avalanches_per_detector,
                      double duration_s, std::int64_t signal_period_gates,
                      const MonitorThresholds& thresholds);

/// Filter-rate threshold from a calibration run: factor times the baseline
/// per-detector rate. A zero baseline gives a zero threshold, so any filtered
/// avalanche then raises the flag.
double filter_threshold_from_baseline(double baseline_rate_per_s, double factor = 10.0);

}  // namespace muteqkd
