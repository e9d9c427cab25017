#include "muteqkd/attack.hpp"

#include <stdexcept>

namespace muteqkd {

Polarization AttackPlan::state_for_pulse(std::int64_t pulse) const {
  // 2^64 is a multiple of 4, so the low two bits are exactly uniform.
  const auto word = derive_seed(state_seed, static_cast<std::uint64_t>(pulse));
  return kAllPolarizations[word & 3U];
}

void AttackPlan::validate(const SpadConfig& spad) const {
  if (period_gates <= spad.dead_time_gates)
    throw std::invalid_argument("attack.period_gates must exceed spad.dead_time_gates");
  if (!(photons_per_pulse / 4.0 >= 150.0))
    throw std::invalid_argument("attack.photons_per_pulse must give every detector >= 150 photons");
}

std::optional<HackingPulse> hacking_pulse_at(const AttackPlan& plan, std::int64_t gate) {
  if (!plan.enabled || plan.period_gates < 1 || gate < 0 || gate % plan.period_gates != 0)
    return std::nullopt;
  return HackingPulse{plan.photons_per_pulse, plan.state_for_pulse(gate / plan.period_gates)};
}

std::optional<int> infer_bit(Basis announced, Polarization eve_state) {
  if (announced != basis_of(eve_state)) return std::nullopt;
  return bit_value(orthogonal(eve_state));
}

}  // namespace muteqkd
