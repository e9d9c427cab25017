#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "muteqkd/attack.hpp"
#include "muteqkd/optics.hpp"
#include "muteqkd/spad.hpp"

namespace muteqkd {

/// Alice's decoy-state source. Intensities are {mu, nu1, nu2}.
struct SourceConfig {
  std::array<double, 3> intensities{0.6, 0.1, 0.01};
  std::array<double, 3> probabilities{0.7, 0.2, 0.1};
  std::int64_t pulse_period_gates = 25;
  double misalignment = 0.01;  // probability of emitting the orthogonal state

  void validate() const;
};

struct ChannelConfig {
  double attenuation_db_per_km = 0.2;
  double distance_km = 0.0;

  double transmittance() const;
  void validate() const;
};

/// Where a click at a signal gate came from.
enum class ClickOrigin : std::uint8_t { signal_photon, hacking_photon, dark, afterpulse, tail };
inline constexpr std::size_t kOriginCount = 5;
std::string_view to_string(ClickOrigin o);

/// Counts for one (intensity, Alice basis) cell. Gains are per signal pulse;
/// errors and Eve's hits are over sifted bits.
struct CellTally {
  std::int64_t sent = 0;
  std::int64_t clicked = 0;       // pulses with at least one click
  std::int64_t sifted = 0;
  std::int64_t errors = 0;
  std::int64_t eve_correct = 0;   // sifted bits Eve inferred correctly
  std::int64_t double_same = 0;   // two clicks in one basis, bit drawn at random
  std::int64_t double_cross = 0;  // clicks in both bases, announced separately
  std::array<std::int64_t, kOriginCount> sifted_by_origin{};
  std::array<std::int64_t, kOriginCount> errors_by_origin{};
  std::array<std::int64_t, kOriginCount> eve_correct_by_origin{};

  CellTally& operator+=(const CellTally& o);
  friend bool operator==(const CellTally&, const CellTally&) = default;
};

struct SessionTally {
  std::array<std::array<CellTally, 2>, 3> cells{};  // [intensity][basis]
  std::array<std::int64_t, 4> clicks_by_cause{};   // every gate, every detector
  std::array<std::int64_t, 4> wide_avalanches{};   // per detector
  std::int64_t pulses = 0;
  std::int64_t gates = 0;
  bool attack = false;

  CellTally intensity_total(std::size_t intensity) const;
  CellTally total() const;
  SessionTally& operator+=(const SessionTally& o);
  friend bool operator==(const SessionTally&, const SessionTally&) = default;
};

/// One sifted announcement, for event-level checks.
struct SiftedEvent {
  std::int64_t gate = 0;
  int intensity = 0;
  Polarization alice_state = Polarization::H;  // intended
  Polarization emitted_state = Polarization::H;
  int detector = 0;
  int bob_bit = 0;
  ClickOrigin origin = ClickOrigin::signal_photon;
  std::optional<Polarization> eve_state;
  std::optional<int> eve_bit;
};

struct SessionOptions {
  bool record_clicks = true;
  bool record_inferences = true;
  bool record_sifted = false;
  std::int64_t shard_pulses = std::int64_t{1} << 18;
};

struct SessionResult {
  SessionTally tally;
  std::vector<ClickRecord> clicks;  // sorted by (gate, detector)
  std::vector<InferenceRecord> inferences;
  std::vector<SiftedEvent> sifted;
  double duration_s = 0.0;
};

/// Event-level decoy BB84 exchange of n_pulses signal pulses. The work is cut
/// into fixed-size shards with seeds derived from `seed`, so the result does
/// not depend on the number of worker threads.
SessionResult run_session(const SourceConfig& source, const ChannelConfig& channel,
                          const ReceiverConfig& receiver, const std::array<SpadConfig, 4>& spads,
                          const AttackPlan& plan, std::int64_t n_pulses, std::uint64_t seed,
                          const SessionOptions& options = {});

/// Correctly inferred sifted bits over all sifted bits; nullopt when nothing
/// was sifted.
std::optional<double> eve_knowledge_fraction(const SessionTally& tally);
/// Same, restricted to sifted bits of one origin.
std::optional<double> eve_knowledge_fraction(const SessionTally& tally, ClickOrigin origin);

}  // namespace muteqkd
