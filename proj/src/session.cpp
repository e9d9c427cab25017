#include "muteqkd/session.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "muteqkd/parallel.hpp"

namespace muteqkd {

void SourceConfig::validate() const {
  const auto& l = intensities;
  if (!(l[0] > l[1] && l[1] > l[2] && l[2] >= 0.0))
    throw std::invalid_argument("source intensities must satisfy mu > nu1 > nu2 >= 0");
  double sum = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0)) throw std::invalid_argument("source probabilities must be non-negative");
    sum += p;
  }
  if (!(sum > 0.0)) throw std::invalid_argument("source probabilities are all zero");
  if (pulse_period_gates < 1) throw std::invalid_argument("source.pulse_period_gates must be >= 1");
  if (!(misalignment >= 0.0 && misalignment <= 1.0))
    throw std::invalid_argument("source.misalignment must lie in [0, 1]");
}

double ChannelConfig::transmittance() const {
  return std::pow(10.0, -attenuation_db_per_km * distance_km / 10.0);
}

void ChannelConfig::validate() const {
  if (!(attenuation_db_per_km >= 0.0)) throw std::invalid_argument("channel attenuation must be >= 0");
  if (!(distance_km >= 0.0)) throw std::invalid_argument("channel.distance_km must be >= 0");
}

std::string_view to_string(ClickOrigin o) {
  switch (o) {
    case ClickOrigin::signal_photon: return "signal_photon";
    case ClickOrigin::hacking_photon: return "hacking_photon";
    case ClickOrigin::dark: return "dark";
    case ClickOrigin::afterpulse: return "afterpulse";
    case ClickOrigin::tail: return "tail";
  }
  return "?";
}

namespace {

template <typename T, std::size_t N>
void add_into(std::array<T, N>& a, const std::array<T, N>& b) {
  for (std::size_t i = 0; i < N; ++i) a[i] += b[i];
}

}  // namespace

CellTally& CellTally::operator+=(const CellTally& o) {
  sent += o.sent;
  clicked += o.clicked;
  sifted += o.sifted;
  errors += o.errors;
  eve_correct += o.eve_correct;
  double_same += o.double_same;
  double_cross += o.double_cross;
  add_into(sifted_by_origin, o.sifted_by_origin);
  add_into(errors_by_origin, o.errors_by_origin);
  add_into(eve_correct_by_origin, o.eve_correct_by_origin);
  return *this;
}

CellTally SessionTally::intensity_total(std::size_t intensity) const {
  CellTally t = cells.at(intensity)[0];
  t += cells[intensity][1];
  return t;
}

CellTally SessionTally::total() const {
  CellTally t;
  for (std::size_t i = 0; i < cells.size(); ++i) t += intensity_total(i);
  return t;
}

SessionTally& SessionTally::operator+=(const SessionTally& o) {
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t b = 0; b < 2; ++b) cells[i][b] += o.cells[i][b];
  add_into(clicks_by_cause, o.clicks_by_cause);
  add_into(wide_avalanches, o.wide_avalanches);
  pulses += o.pulses;
  gates += o.gates;
  attack = attack || o.attack;
  return *this;
}

namespace {

using ResponseTable = std::vector<DetectionResponse>;

// Fock responses for 0..max_count photons; larger counts fall back to a
// direct evaluation.
std::shared_ptr<const ResponseTable> build_table(const SpadConfig& cfg, std::int64_t max_count) {
  auto table = std::make_shared<ResponseTable>(static_cast<std::size_t>(max_count) + 1);
  parallel_for(table->size(), [&](std::size_t k) {
    (*table)[k] = response_for_count(static_cast<std::int64_t>(k), cfg);
  });
  return table;
}

struct SharedSetup {
  SourceConfig source;
  double transmittance = 1.0;
  ReceiverConfig receiver;
  std::array<SpadConfig, 4> spads;
  std::array<std::shared_ptr<const ResponseTable>, 4> tables;
  AttackPlan plan;
  std::array<double, 3> cumulative{};
  SessionOptions options;
};

struct ShardOutput {
  SessionTally tally;
  std::vector<ClickRecord> clicks;
  std::vector<InferenceRecord> inferences;
  std::vector<SiftedEvent> sifted;
};

ClickOrigin origin_of(ClickCause cause, bool hacked) {
  switch (cause) {
    case ClickCause::photon: return hacked ? ClickOrigin::hacking_photon : ClickOrigin::signal_photon;
    case ClickCause::dark: return ClickOrigin::dark;
    case ClickCause::afterpulse: return ClickOrigin::afterpulse;
    case ClickCause::tail: return ClickOrigin::tail;
  }
  return ClickOrigin::dark;
}

class ShardRunner {
 public:
  // Each shard starts with fresh detectors at its first gate.
  ShardRunner(const SharedSetup& setup, std::uint64_t seed, std::int64_t first_gate)
      : s_(setup),
        rng_(seed),
        spads_{Spad(setup.spads[0], 0, phase_period(setup), first_gate),
               Spad(setup.spads[1], 1, phase_period(setup), first_gate),
               Spad(setup.spads[2], 2, phase_period(setup), first_gate),
               Spad(setup.spads[3], 3, phase_period(setup), first_gate)} {}

  ShardOutput run(std::int64_t first_pulse, std::int64_t end_pulse) {
    const std::int64_t period = s_.source.pulse_period_gates;
    const std::int64_t end_gate = end_pulse * period;
    sink_ = s_.options.record_clicks ? &out_.clicks : nullptr;
    if (s_.plan.enabled) {
      const std::int64_t p = s_.plan.period_gates;
      next_hack_ = ((first_pulse * period + p - 1) / p) * p;
    }

    for (std::int64_t k = first_pulse; k < end_pulse; ++k) {
      const std::int64_t gate = k * period;
      while (s_.plan.enabled && next_hack_ < gate) hack_only_gate();
      signal_gate(gate);
    }
    while (s_.plan.enabled && next_hack_ < end_gate) hack_only_gate();
    for (auto& spad : spads_) spad.advance_to(end_gate, rng_, sink_);

    for (std::size_t d = 0; d < 4; ++d) {
      const auto& st = spads_[d].state();
      add_into(out_.tally.clicks_by_cause, st.clicks_by_cause);
      out_.tally.wide_avalanches[d] = st.wide_avalanches;
    }
    out_.tally.pulses = end_pulse - first_pulse;
    out_.tally.gates = end_gate - first_pulse * period;
    out_.tally.attack = s_.plan.enabled;
    std::sort(out_.clicks.begin(), out_.clicks.end(), [](const ClickRecord& a, const ClickRecord& b) {
      return a.gate != b.gate ? a.gate < b.gate : a.detector < b.detector;
    });
    return std::move(out_);
  }

 private:
  static std::int64_t phase_period(const SharedSetup& s) {
    return s.plan.enabled ? s.plan.period_gates : s.source.pulse_period_gates;
  }

  const DetectionResponse& response(int d, std::int64_t photons) {
    const auto& table = *s_.tables[static_cast<std::size_t>(d)];
    if (photons < static_cast<std::int64_t>(table.size())) return table[static_cast<std::size_t>(photons)];
    overflow_ = response_for_count(photons, s_.spads[static_cast<std::size_t>(d)]);
    return overflow_;
  }

  DetectorCounts eve_pulse(std::int64_t gate) {
    const auto pulse = hacking_pulse_at(s_.plan, gate);
    eve_state_ = pulse->state;
    next_hack_ += s_.plan.period_gates;
    return route_photons(poisson(rng_, pulse->photons), pulse->state, s_.receiver, rng_);
  }

  void hack_only_gate() {
    const std::int64_t gate = next_hack_;
    const DetectorCounts counts = eve_pulse(gate);
    for (int d = 0; d < 4; ++d) {
      const auto i = static_cast<std::size_t>(d);
      spads_[i].step(gate, response(d, counts[i]), rng_, sink_);
    }
  }

  void signal_gate(std::int64_t gate) {
    // Alice
    const double u = uniform01(rng_);
    int intensity = 0;
    while (intensity < 2 && u >= s_.cumulative[static_cast<std::size_t>(intensity)]) ++intensity;
    const Basis basis = uniform01(rng_) < 0.5 ? Basis::Z : Basis::X;
    const int alice_bit = uniform01(rng_) < 0.5 ? 0 : 1;
    const Polarization intended = state_for(basis, alice_bit);
    const Polarization emitted =
        (s_.source.misalignment > 0.0 && uniform01(rng_) < s_.source.misalignment) ? orthogonal(intended)
                                                                                  : intended;
    std::int64_t photons = poisson(rng_, s_.source.intensities[static_cast<std::size_t>(intensity)]);
    photons = binomial(rng_, photons, s_.transmittance);
    DetectorCounts signal = route_photons(photons, emitted, s_.receiver, rng_);

    // Eve
    DetectorCounts hacking{0, 0, 0, 0};
    if (s_.plan.enabled && next_hack_ == gate) hacking = eve_pulse(gate);

    // Bob
    std::array<bool, 4> clicked{};
    std::array<ClickCause, 4> cause{};
    for (int d = 0; d < 4; ++d) {
      const auto i = static_cast<std::size_t>(d);
      const GateStep step = spads_[i].step(gate, response(d, signal[i] + hacking[i]), rng_, sink_);
      if (step.outcome == GateOutcome::click) {
        clicked[i] = true;
        cause[i] = step.click->cause;
      }
    }

    CellTally& cell = out_.tally.cells[static_cast<std::size_t>(intensity)][basis == Basis::Z ? 0 : 1];
    ++cell.sent;
    if (!(clicked[0] || clicked[1] || clicked[2] || clicked[3])) return;
    ++cell.clicked;

    int announced_bases = 0;
    for (Basis b : {Basis::Z, Basis::X}) {
      const int d0 = detector_index(state_for(b, 0));
      const int d1 = detector_index(state_for(b, 1));
      const bool c0 = clicked[static_cast<std::size_t>(d0)];
      const bool c1 = clicked[static_cast<std::size_t>(d1)];
      if (!c0 && !c1) continue;
      ++announced_bases;
      int bob_bit = c1 ? 1 : 0;
      if (c0 && c1) {
        ++cell.double_same;
        bob_bit = uniform01(rng_) < 0.5 ? 0 : 1;
      }
      const int det = bob_bit == 0 ? d0 : d1;
      announce(gate, b, bob_bit, det, cause[static_cast<std::size_t>(det)],
               hacking[static_cast<std::size_t>(det)] > 0, basis, alice_bit, intended, emitted,
               intensity, cell);
    }
    if (announced_bases == 2) ++cell.double_cross;
  }

  void announce(std::int64_t gate, Basis b, int bob_bit, int det, ClickCause cause, bool hacked,
                Basis alice_basis, int alice_bit, Polarization intended, Polarization emitted,
                int intensity, CellTally& cell) {
    std::optional<int> eve_bit;
    if (s_.plan.enabled && eve_state_) {
      eve_bit = infer_bit(b, *eve_state_);
      if (s_.options.record_inferences) out_.inferences.push_back({gate, b, *eve_state_, eve_bit});
    }
    if (b != alice_basis) return;

    const auto origin = origin_of(cause, hacked);
    const auto o = static_cast<std::size_t>(origin);
    ++cell.sifted;
    ++cell.sifted_by_origin[o];
    if (bob_bit != alice_bit) {
      ++cell.errors;
      ++cell.errors_by_origin[o];
    }
    if (eve_bit && *eve_bit == bob_bit) {
      ++cell.eve_correct;
      ++cell.eve_correct_by_origin[o];
    }
    if (s_.options.record_sifted) {
      out_.sifted.push_back(
          {gate, intensity, intended, emitted, det, bob_bit, origin, eve_state_, eve_bit});
    }
  }

  const SharedSetup& s_;
  Rng rng_;
  std::array<Spad, 4> spads_;
  ShardOutput out_;
  std::vector<ClickRecord>* sink_ = nullptr;
  std::int64_t next_hack_ = kNever;
  std::optional<Polarization> eve_state_;
  DetectionResponse overflow_;
};

}  // namespace

SessionResult run_session(const SourceConfig& source, const ChannelConfig& channel,
                          const ReceiverConfig& receiver, const std::array<SpadConfig, 4>& spads,
                          const AttackPlan& plan, std::int64_t n_pulses, std::uint64_t seed,
                          const SessionOptions& options) {
  if (n_pulses < 1) throw std::invalid_argument("a session needs at least one pulse");
  if (options.shard_pulses < 1) throw std::invalid_argument("shard size must be >= 1");
  source.validate();
  channel.validate();
  receiver.validate();
  for (const auto& s : spads) s.validate();
  if (plan.enabled) {
    for (const auto& s : spads) plan.validate(s);
  }

  SharedSetup setup;
  setup.source = source;
  setup.transmittance = channel.transmittance();
  setup.receiver = receiver;
  setup.spads = spads;
  setup.plan = plan;
  setup.options = options;
  double sum = 0.0;
  for (double p : source.probabilities) sum += p;
  double acc = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    acc += source.probabilities[i] / sum;
    setup.cumulative[i] = acc;
  }
  setup.cumulative[2] = 1.0;

  // Cover the bulk of a hacking pulse's photon-number distribution per detector.
  std::int64_t max_count = 64;
  if (plan.enabled) {
    const double m = plan.photons_per_pulse;
    max_count = std::max<std::int64_t>(max_count, static_cast<std::int64_t>(m + 8.0 * std::sqrt(m) + 16.0));
  }
  for (std::size_t d = 0; d < 4; ++d) {
    for (std::size_t e = 0; e < d && !setup.tables[d]; ++e) {
      const auto& a = spads[d];
      const auto& b = spads[e];
      if (a.detection_efficiency == b.detection_efficiency && a.wide_threshold == b.wide_threshold &&
          a.afterpulse_base == b.afterpulse_base && a.afterpulse_scale == b.afterpulse_scale)
        setup.tables[d] = setup.tables[e];
    }
    if (!setup.tables[d]) setup.tables[d] = build_table(spads[d], max_count);
  }

  const std::int64_t shards = (n_pulses + options.shard_pulses - 1) / options.shard_pulses;
  std::vector<ShardOutput> outputs(static_cast<std::size_t>(shards));
  parallel_for(outputs.size(), [&](std::size_t i) {
    const auto first = static_cast<std::int64_t>(i) * options.shard_pulses;
    const auto end = std::min(n_pulses, first + options.shard_pulses);
    ShardRunner runner(setup, derive_seed(seed, i), first * source.pulse_period_gates);
    outputs[i] = runner.run(first, end);
  });

  SessionResult result;
  for (auto& o : outputs) {
    result.tally += o.tally;
    result.clicks.insert(result.clicks.end(), o.clicks.begin(), o.clicks.end());
    result.inferences.insert(result.inferences.end(), o.inferences.begin(), o.inferences.end());
    result.sifted.insert(result.sifted.end(), o.sifted.begin(), o.sifted.end());
    o = {};
  }
  result.tally.attack = plan.enabled;
  result.duration_s = static_cast<double>(result.tally.gates) / spads[0].gate_frequency_hz;
  return result;
}

std::optional<double> eve_knowledge_fraction(const SessionTally& tally) {
  const CellTally t = tally.total();
  if (t.sifted == 0) return std::nullopt;
  return static_cast<double>(t.eve_correct) / static_cast<double>(t.sifted);
}

std::optional<double> eve_knowledge_fraction(const SessionTally& tally, ClickOrigin origin) {
  const CellTally t = tally.total();
  const auto o = static_cast<std::size_t>(origin);
  if (t.sifted_by_origin[o] == 0) return std::nullopt;
  return static_cast<double>(t.eve_correct_by_origin[o]) / static_cast<double>(t.sifted_by_origin[o]);
}

}  // namespace muteqkd
