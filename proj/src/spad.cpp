#include "muteqkd/spad.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/poisson.hpp>

#include "muteqkd/parallel.hpp"

namespace muteqkd {

void SpadConfig::validate() const {
  if (!(gate_frequency_hz > 0.0)) throw std::invalid_argument("spad.gate_frequency_hz must be positive");
  if (dead_time_gates < 0) throw std::invalid_argument("spad.dead_time_gates must be non-negative");
  if (!(detection_efficiency >= 0.0 && detection_efficiency <= 1.0))
    throw std::invalid_argument("spad.detection_efficiency must lie in [0, 1]");
  if (!(dark_count_prob >= 0.0 && dark_count_prob <= 1.0))
    throw std::invalid_argument("spad.dark_count_prob must lie in [0, 1]");
  if (!(wide_threshold >= 2.0)) throw std::invalid_argument("spad.wide_threshold must be >= 2");
  if (!(afterpulse_base >= 0.0)) throw std::invalid_argument("spad.afterpulse_base must be >= 0");
  if (!(afterpulse_scale > 0.0)) throw std::invalid_argument("spad.afterpulse_scale must be positive");
  if (!(tail_prob >= 0.0 && tail_prob <= 1.0))
    throw std::invalid_argument("spad.tail_prob must lie in [0, 1]");
}

std::int64_t dead_time_in_gates(double dead_time_s, double gate_frequency_hz) {
  return std::llround(dead_time_s * gate_frequency_hz);
}

double afterpulse_probability(double n_detected, const SpadConfig& cfg) {
  if (n_detected <= 0.0) return 0.0;
  return std::min(1.0, cfg.afterpulse_base * std::log1p(n_detected / cfg.afterpulse_scale));
}

double wide_fraction(std::int64_t n_detected, const SpadConfig& cfg) {
  if (n_detected <= 0) return 0.0;
  return std::clamp(static_cast<double>(n_detected) - cfg.wide_threshold + 1.0, 0.0, 1.0);
}

namespace {

template <typename Pmf>
DetectionResponse classify(double p_none, std::int64_t n_max, Pmf&& pmf, const SpadConfig& cfg) {
  DetectionResponse r;
  r.p_none = p_none;
  double click = 0.0, wide = 0.0, ap = 0.0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const double p = pmf(n);
    const double w = wide_fraction(n, cfg);
    click += p * (1.0 - w);
    wide += p * w;
    ap += p * w * afterpulse_probability(static_cast<double>(n), cfg);
  }
  r.p_click = click;
  r.p_wide = wide;
  r.afterpulse_given_wide = wide > 0.0 ? ap / wide : 0.0;
  return r;
}

}  // namespace

DetectionResponse response_for_count(std::int64_t incident, const SpadConfig& cfg) {
  const double eta = cfg.detection_efficiency;
  if (incident <= 0 || eta <= 0.0) return {};
  if (eta >= 1.0) {
    return classify(0.0, incident, [&](std::int64_t n) { return n == incident ? 1.0 : 0.0; }, cfg);
  }
  boost::math::binomial_distribution<double> dist(static_cast<double>(incident), eta);
  const double p_none = std::pow(1.0 - eta, static_cast<double>(incident));
  return classify(p_none, incident,
                  [&](std::int64_t n) { return boost::math::pdf(dist, static_cast<double>(n)); }, cfg);
}

DetectionResponse response_for_mean(double mean_incident, const SpadConfig& cfg) {
  const double lambda = mean_incident * cfg.detection_efficiency;
  if (lambda <= 0.0) return {};
  boost::math::poisson_distribution<double> dist(lambda);
  const auto n_max = static_cast<std::int64_t>(std::ceil(lambda + 40.0 * std::sqrt(lambda) + 60.0));
  return classify(std::exp(-lambda), n_max,
                  [&](std::int64_t n) { return boost::math::pdf(dist, static_cast<double>(n)); }, cfg);
}

std::string_view to_string(ClickCause c) {
  switch (c) {
    case ClickCause::photon: return "photon";
    case ClickCause::dark: return "dark";
    case ClickCause::afterpulse: return "afterpulse";
    case ClickCause::tail: return "tail";
  }
  return "?";
}

ClickCause parse_click_cause(std::string_view text) {
  if (text == "photon") return ClickCause::photon;
  if (text == "dark") return ClickCause::dark;
  if (text == "afterpulse") return ClickCause::afterpulse;
  if (text == "tail") return ClickCause::tail;
  throw std::invalid_argument("unknown click cause '" + std::string(text) + "'");
}

std::string_view to_string(GateOutcome o) {
  switch (o) {
    case GateOutcome::silent: return "silent";
    case GateOutcome::click: return "click";
    case GateOutcome::muted_wide_avalanche: return "muted_wide_avalanche";
  }
  return "?";
}

std::int64_t SpadState::clicks() const {
  return clicks_by_cause[0] + clicks_by_cause[1] + clicks_by_cause[2] + clicks_by_cause[3];
}

namespace {

std::int64_t next_event_gate(const SpadState& s) {
  std::int64_t t = s.next_dark_gate;
  if (s.afterpulse_gate != SpadState::kNone) t = std::min(t, s.afterpulse_gate);
  if (s.tail_gate != SpadState::kNone) t = std::min(t, s.tail_gate);
  return t;
}

std::int64_t schedule_after(std::int64_t gate, std::int64_t trials) {
  if (trials == kNever) return kNever;
  return (gate > 0 && trials >= kNever - gate) ? kNever : gate + trials;
}

GateStep fire(SpadState& s, const SpadConfig& cfg, std::int64_t gate, ClickCause cause,
              const GateContext& ctx) {
  s.dead_until = gate + cfg.dead_time_gates + 1;
  s.afterpulse_gate = SpadState::kNone;
  s.pending_afterpulse = 0.0;
  s.tail_gate = SpadState::kNone;
  ++s.clicks_by_cause[static_cast<std::size_t>(cause)];
  ClickRecord rec{gate, ctx.detector, cause, ctx.phase_period > 0 ? gate % ctx.phase_period : 0};
  if (ctx.sink) ctx.sink->push_back(rec);
  return {GateOutcome::click, rec};
}

// One gate, assuming every earlier event has been processed.
GateStep process_gate(SpadState& s, const SpadConfig& cfg, const DetectionResponse& response,
                      std::int64_t gate, Rng& rng, const GateContext& ctx) {
  s.last_gate = gate;
  bool dark_seed = false;
  if (s.next_dark_gate == gate) {
    dark_seed = true;
    s.next_dark_gate = schedule_after(gate, geometric_trials(rng, cfg.dark_count_prob));
  }
  if (gate < s.dead_until) return {};

  if (s.afterpulse_gate == gate) {
    const double p = s.pending_afterpulse;
    s.afterpulse_gate = SpadState::kNone;
    s.pending_afterpulse = 0.0;
    if (p > 0.0 && uniform01(rng) < p) return fire(s, cfg, gate, ClickCause::afterpulse, ctx);
  }
  if (s.tail_gate == gate) return fire(s, cfg, gate, ClickCause::tail, ctx);

  if (response.p_none < 1.0) {
    const double u = uniform01(rng);
    if (u < response.p_click) return fire(s, cfg, gate, ClickCause::photon, ctx);
    if (u < response.p_click + response.p_wide) {
      s.dead_until = gate + cfg.dead_time_gates + 1;
      s.afterpulse_gate = s.dead_until;
      s.pending_afterpulse = response.afterpulse_given_wide;
      s.tail_gate = (cfg.tail_prob > 0.0 && uniform01(rng) < cfg.tail_prob) ? s.dead_until + 1
                                                                              : SpadState::kNone;
      ++s.wide_avalanches;
      return {GateOutcome::muted_wide_avalanche, std::nullopt};
    }
  }
  if (dark_seed) return fire(s, cfg, gate, ClickCause::dark, ctx);
  return {};
}

void ensure_dark_schedule(SpadState& s, const SpadConfig& cfg, Rng& rng) {
  if (s.next_dark_gate == SpadState::kNone)
    s.next_dark_gate = schedule_after(s.last_gate, geometric_trials(rng, cfg.dark_count_prob));
}

}  // namespace

void advance_idle(SpadState& s, const SpadConfig& cfg, std::int64_t gate, Rng& rng,
                  const GateContext& ctx) {
  ensure_dark_schedule(s, cfg, rng);
  static const DetectionResponse vacuum{};
  for (std::int64_t t = next_event_gate(s); t < gate; t = next_event_gate(s)) {
    process_gate(s, cfg, vacuum, t, rng, ctx);
  }
}

GateStep step_gate(SpadState& s, const SpadConfig& cfg, const DetectionResponse& response,
                   std::int64_t gate, Rng& rng, const GateContext& ctx) {
  if (gate <= s.last_gate) {
    throw std::logic_error("step_gate: gate " + std::to_string(gate) +
                           " is not after previous gate " + std::to_string(s.last_gate));
  }
  advance_idle(s, cfg, gate, rng, ctx);
  return process_gate(s, cfg, response, gate, rng, ctx);
}

GateStep step_gate(SpadState& s, const SpadConfig& cfg, std::int64_t incident_photons,
                   std::int64_t gate, Rng& rng, const GateContext& ctx) {
  return step_gate(s, cfg, response_for_count(incident_photons, cfg), gate, rng, ctx);
}

Spad::Spad(SpadConfig cfg, int detector, std::int64_t phase_period, std::int64_t first_gate)
    : cfg_(cfg), detector_(detector), phase_period_(phase_period) {
  cfg_.validate();
  state_.dead_until = first_gate;
  state_.last_gate = first_gate - 1;
}

GateContext Spad::context(std::vector<ClickRecord>* sink) const {
  return GateContext{detector_, phase_period_, sink};
}

const DetectionResponse& Spad::response(std::int64_t incident_photons) {
  const auto k = static_cast<std::size_t>(std::max<std::int64_t>(incident_photons, 0));
  if (k >= cache_.size()) {
    cache_.resize(k + 1);
    cached_.resize(k + 1, false);
  }
  if (!cached_[k]) {
    cache_[k] = response_for_count(static_cast<std::int64_t>(k), cfg_);
    cached_[k] = true;
  }
  return cache_[k];
}

GateStep Spad::step(std::int64_t gate, std::int64_t incident_photons, Rng& rng,
                    std::vector<ClickRecord>* sink) {
  return step_gate(state_, cfg_, response(incident_photons), gate, rng, context(sink));
}

GateStep Spad::step(std::int64_t gate, const DetectionResponse& response, Rng& rng,
                    std::vector<ClickRecord>* sink) {
  return step_gate(state_, cfg_, response, gate, rng, context(sink));
}

void Spad::advance_to(std::int64_t gate, Rng& rng, std::vector<ClickRecord>* sink) {
  advance_idle(state_, cfg_, gate, rng, context(sink));
}

TrainRun run_pulse_train(const SpadConfig& cfg, double photons, std::int64_t pulse_period_gates,
                         double duration_s, std::uint64_t seed, bool keep_clicks) {
  if (pulse_period_gates < 1) throw std::invalid_argument("pulse period must be >= 1 gate");
  if (!(duration_s > 0.0)) throw std::invalid_argument("duration must be positive");
  Spad spad(cfg, 0, pulse_period_gates);
  Rng rng(seed);
  const auto total_gates = static_cast<std::int64_t>(std::llround(duration_s * cfg.gate_frequency_hz));
  const std::int64_t pulses = (total_gates + pulse_period_gates - 1) / pulse_period_gates;
  const DetectionResponse response = response_for_mean(photons, cfg);

  TrainRun run;
  auto* sink = keep_clicks ? &run.clicks : nullptr;
  for (std::int64_t k = 0; k < pulses; ++k) spad.step(k * pulse_period_gates, response, rng, sink);
  spad.advance_to(total_gates, rng, sink);

  run.point.photons = photons;
  run.point.pulses = pulses;
  run.point.clicks = spad.state().clicks();
  run.point.wide_avalanches = spad.state().wide_avalanches;
  run.point.counts_per_second = static_cast<double>(run.point.clicks) /
                                (static_cast<double>(total_gates) / cfg.gate_frequency_hz);
  return run;
}

std::vector<SweepPoint> run_intensity_sweep(const SpadConfig& cfg, std::span<const double> photons,
                                            std::int64_t pulse_period_gates, double duration_s,
                                            std::uint64_t seed) {
  cfg.validate();
  std::vector<SweepPoint> out(photons.size());
  parallel_for(photons.size(), [&](std::size_t i) {
    out[i] = run_pulse_train(cfg, photons[i], pulse_period_gates, duration_s, derive_seed(seed, i),
                             false)
                 .point;
  });
  return out;
}

std::vector<double> log_photon_grid(double min_photons, double max_photons, double step_db,
                                    std::span<const double> anchors) {
  if (!(min_photons > 0.0 && max_photons >= min_photons && step_db > 0.0))
    throw std::invalid_argument("photon grid needs 0 < min <= max and a positive step");
  std::vector<double> grid;
  for (int k = 0;; ++k) {
    const double v = min_photons * std::pow(10.0, k * step_db / 10.0);
    if (v > max_photons * (1.0 + 1e-12)) break;
    grid.push_back(v);
  }
  if (grid.back() < max_photons * (1.0 - 1e-12)) grid.push_back(max_photons);
  grid.insert(grid.end(), anchors.begin(), anchors.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(a, b); }),
             grid.end());
  return grid;
}

std::vector<std::int64_t> click_phase_histogram(std::span<const ClickRecord> records,
                                                std::int64_t period) {
  if (period < 1) throw std::invalid_argument("histogram period must be >= 1");
  std::vector<std::int64_t> hist(static_cast<std::size_t>(period), 0);
  for (const auto& r : records) {
    const std::int64_t phase = ((r.gate % period) + period) % period;
    ++hist[static_cast<std::size_t>(phase)];
  }
  return hist;
}

}  // namespace muteqkd
