#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "muteqkd/random.hpp"

namespace muteqkd {

/// Static parameters of one gated SPAD with a width discriminator.
///
/// The analog discriminator (amplitude and width thresholds) is reduced to a
/// threshold on the number of photons detected in a gate: avalanches seeded by
/// at least `wide_threshold` photons are too wide and are discarded. A
/// non-integer threshold interpolates linearly, i.e. an avalanche seeded by n
/// photons is wide with probability clamp(n - wide_threshold + 1, 0, 1).
/// Afterpulse and tail parameters are fitted with tools/fit_spad.
struct SpadConfig {
  double gate_frequency_hz = 1.0e9;
  std::int64_t dead_time_gates = 23;
  double detection_efficiency = 0.206;
  double dark_count_prob = 1.5e-7;
  double wide_threshold = 9.6307;
  double afterpulse_base = 6.507e-6;
  double afterpulse_scale = 1000.0;
  double tail_prob = 2.6e-7;

  void validate() const;
};

/// Dead time in gates for a dead time in seconds at the given gate rate.
std::int64_t dead_time_in_gates(double dead_time_s, double gate_frequency_hz);

/// Afterpulse probability carried out of a wide avalanche seeded by
/// n_detected photons: min(1, base * ln(1 + n / scale)).
double afterpulse_probability(double n_detected, const SpadConfig& cfg);

/// Probability that a wide avalanche seeded by n detected photons is filtered.
double wide_fraction(std::int64_t n_detected, const SpadConfig& cfg);

/// Per-gate response to one optical input, marginalised over the detected
/// photon number. Sampling from it is equal in law to drawing the detected
/// count and classifying it: the afterpulse of a wide avalanche is a
/// Bernoulli draw whose mean is afterpulse_given_wide.
struct DetectionResponse {
  double p_none = 1.0;
  double p_click = 0.0;
  double p_wide = 0.0;
  double afterpulse_given_wide = 0.0;
};

/// Fock input: detected ~ Binomial(incident, efficiency).
DetectionResponse response_for_count(std::int64_t incident, const SpadConfig& cfg);
/// Coherent input: detected ~ Poisson(mean * efficiency).
DetectionResponse response_for_mean(double mean_incident, const SpadConfig& cfg);

enum class GateOutcome : std::uint8_t { silent, click, muted_wide_avalanche };
enum class ClickCause : std::uint8_t { photon = 0, dark = 1, afterpulse = 2, tail = 3 };

std::string_view to_string(ClickCause c);
ClickCause parse_click_cause(std::string_view text);
std::string_view to_string(GateOutcome o);

struct ClickRecord {
  std::int64_t gate = 0;
  int detector = 0;
  ClickCause cause = ClickCause::photon;
  std::int64_t phase = 0;

  friend bool operator==(const ClickRecord&, const ClickRecord&) = default;
};

/// Dynamic state of one SPAD. Pending afterpulse and tail events are kept as
/// the gates at which they resolve; kNone marks an absent event.
struct SpadState {
  static constexpr std::int64_t kNone = -1;

  std::int64_t dead_until = 0;  // first live gate
  double pending_afterpulse = 0.0;
  std::int64_t afterpulse_gate = kNone;
  std::int64_t tail_gate = kNone;
  std::int64_t next_dark_gate = kNone;  // lazily drawn
  std::int64_t last_gate = -1;

  std::array<std::int64_t, 4> clicks_by_cause{0, 0, 0, 0};
  std::int64_t wide_avalanches = 0;

  std::int64_t clicks() const;
};

struct GateStep {
  GateOutcome outcome = GateOutcome::silent;
  std::optional<ClickRecord> click;
};

struct GateContext {
  int detector = 0;
  std::int64_t phase_period = 1;
  /// Receives every click, including those on idle gates skipped between calls.
  std::vector<ClickRecord>* sink = nullptr;
};

/// Advances the detector to `gate` and applies `response` there. Idle gates
/// between the previous call and `gate` are resolved event by event (dark
/// seeds, afterpulse at dead-time expiry, tail one gate later); their clicks go
/// only to ctx.sink. Throws std::logic_error on a non-increasing gate.
GateStep step_gate(SpadState& state, const SpadConfig& cfg, const DetectionResponse& response,
                   std::int64_t gate, Rng& rng, const GateContext& ctx = {});

GateStep step_gate(SpadState& state, const SpadConfig& cfg, std::int64_t incident_photons,
                   std::int64_t gate, Rng& rng, const GateContext& ctx = {});

/// Resolves idle gates strictly before `gate` without applying any light.
void advance_idle(SpadState& state, const SpadConfig& cfg, std::int64_t gate, Rng& rng,
                  const GateContext& ctx = {});

/// One detector with its state and a cache of Fock-input responses.
class Spad {
 public:
  /// A fresh, armed detector whose first gate is `first_gate`.
  explicit Spad(SpadConfig cfg, int detector = 0, std::int64_t phase_period = 1,
                std::int64_t first_gate = 0);

  GateStep step(std::int64_t gate, std::int64_t incident_photons, Rng& rng,
                std::vector<ClickRecord>* sink = nullptr);
  GateStep step(std::int64_t gate, const DetectionResponse& response, Rng& rng,
                std::vector<ClickRecord>* sink = nullptr);
  void advance_to(std::int64_t gate, Rng& rng, std::vector<ClickRecord>* sink = nullptr);

  const DetectionResponse& response(std::int64_t incident_photons);
  const SpadState& state() const { return state_; }
  const SpadConfig& config() const { return cfg_; }

 private:
  GateContext context(std::vector<ClickRecord>* sink) const;

  SpadConfig cfg_;
  int detector_;
  std::int64_t phase_period_;
  SpadState state_;
  std::vector<DetectionResponse> cache_;
  std::vector<bool> cached_;
};

struct SweepPoint {
  double photons = 0.0;
  double counts_per_second = 0.0;
  std::int64_t clicks = 0;
  std::int64_t wide_avalanches = 0;
  std::int64_t pulses = 0;
};

/// Drives one SPAD with a coherent pulse train (one pulse every
/// pulse_period_gates) for each mean photon number and reports the click rate.
/// Points are independent streams derived from `seed` and may run in parallel.
std::vector<SweepPoint> run_intensity_sweep(const SpadConfig& cfg, std::span<const double> photons,
                                            std::int64_t pulse_period_gates, double duration_s,
                                            std::uint64_t seed);

/// Same train for one intensity, also returning every click.
struct TrainRun {
  SweepPoint point;
  std::vector<ClickRecord> clicks;
};
TrainRun run_pulse_train(const SpadConfig& cfg, double photons, std::int64_t pulse_period_gates,
                         double duration_s, std::uint64_t seed, bool keep_clicks);

/// Logarithmic grid from min to max photons in step_db increments, the max
/// appended if not hit exactly, plus the extra anchors; sorted, deduplicated.
std::vector<double> log_photon_grid(double min_photons, double max_photons, double step_db,
                                    std::span<const double> anchors = {});

std::vector<std::int64_t> click_phase_histogram(std::span<const ClickRecord> records,
                                                std::int64_t period);

}  // namespace muteqkd
