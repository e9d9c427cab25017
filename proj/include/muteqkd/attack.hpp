#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "muteqkd/optics.hpp"
#include "muteqkd/spad.hpp"

namespace muteqkd {

/// Eve's hacking pulse train. One coherent pulse every period_gates gates,
/// starting at gate 0, each in a polarization drawn uniformly from
/// {H, V, A, D}. States are a pure function of (state_seed, pulse index), so a
/// plan is immutable and can be shared by every worker.
struct AttackPlan {
  bool enabled = false;
  std::int64_t period_gates = 25;
  double photons_per_pulse = 600.0;  // mean photon number at Bob's input
  std::uint64_t state_seed = 0x5eedULL;

  Polarization state_for_pulse(std::int64_t pulse) const;

  /// The train must re-mute right after each dead time and put at least 150
  /// photons on every targeted detector.
  void validate(const SpadConfig& spad) const;
};

struct HackingPulse {
  double photons = 0.0;
  Polarization state = Polarization::H;
};

/// The pulse Eve injects at `gate`, if any.
std::optional<HackingPulse> hacking_pulse_at(const AttackPlan& plan, std::int64_t gate);

/// Bit Eve assigns to a click announced in `announced`: the bit of the one
/// detector her pulse left unmuted, or nothing on a basis mismatch.
std::optional<int> infer_bit(Basis announced, Polarization eve_state);

struct InferenceRecord {
  std::int64_t gate = 0;
  Basis announced_basis = Basis::Z;
  Polarization eve_state = Polarization::H;
  std::optional<int> inferred_bit;

  friend bool operator==(const InferenceRecord&, const InferenceRecord&) = default;
};

}  // namespace muteqkd
