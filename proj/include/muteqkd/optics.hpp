#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "muteqkd/random.hpp"

namespace muteqkd {

enum class Basis : std::uint8_t { Z, X };

/// The four BB84 polarization states. The underlying value doubles as the
/// fixed detector index (H->0, V->1, A->2, D->3).
enum class Polarization : std::uint8_t { H = 0, V = 1, A = 2, D = 3 };

inline constexpr std::array<Polarization, 4> kAllPolarizations{
    Polarization::H, Polarization::V, Polarization::A, Polarization::D};

constexpr Basis basis_of(Polarization s) {
  return (s == Polarization::H || s == Polarization::V) ? Basis::Z : Basis::X;
}

constexpr Polarization orthogonal(Polarization s) {
  switch (s) {
    case Polarization::H: return Polarization::V;
    case Polarization::V: return Polarization::H;
    case Polarization::A: return Polarization::D;
    case Polarization::D: return Polarization::A;
  }
  return s;
}

/// Key bit carried by a state: H and A encode 0, V and D encode 1.
constexpr int bit_value(Polarization s) {
  return (s == Polarization::V || s == Polarization::D) ? 1 : 0;
}

constexpr Polarization state_for(Basis b, int bit) {
  if (b == Basis::Z) return bit == 0 ? Polarization::H : Polarization::V;
  return bit == 0 ? Polarization::A : Polarization::D;
}

constexpr int detector_index(Polarization s) { return static_cast<int>(s); }

constexpr Polarization polarization_of_detector(int detector) {
  return static_cast<Polarization>(detector & 3);
}

std::string_view to_string(Polarization s);
std::string_view to_string(Basis b);
Polarization parse_polarization(std::string_view text);
Basis parse_basis(std::string_view text);

/// Passive receiver: a splitter choosing the Z or X branch, followed by one
/// polarizing beam splitter per branch.
struct ReceiverConfig {
  double splitter_ratio = 0.5;        // fraction routed to the Z branch
  double extinction_ratio_db = 43.0;  // +inf means perfect extinction

  /// Per-photon probability of exiting the wrong port of a same-basis PBS.
  double leakage() const;
  void validate() const;
};

/// (correct port, wrong port) probabilities for one photon. For a
/// conjugate-basis input both ports are equally likely.
struct PortProbabilities {
  double correct = 0.0;
  double wrong = 0.0;
};

PortProbabilities project_probability(Polarization incoming, Basis measured,
                                      double extinction_ratio_db);

using DetectorCounts = std::array<std::int64_t, 4>;

/// Multinomial split of n photons of one polarization onto the four detectors.
DetectorCounts route_photons(std::int64_t n_photons, Polarization state,
                             const ReceiverConfig& cfg, Rng& rng);

}  // namespace muteqkd
