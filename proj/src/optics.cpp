#include "muteqkd/optics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace muteqkd {

std::string_view to_string(Polarization s) {
  switch (s) {
    case Polarization::H: return "H";
    case Polarization::V: return "V";
    case Polarization::A: return "A";
    case Polarization::D: return "D";
  }
  return "?";
}

std::string_view to_string(Basis b) { return b == Basis::Z ? "Z" : "X"; }

Polarization parse_polarization(std::string_view text) {
  if (text == "H") return Polarization::H;
  if (text == "V") return Polarization::V;
  if (text == "A") return Polarization::A;
  if (text == "D") return Polarization::D;
  throw std::invalid_argument("unknown polarization '" + std::string(text) + "'");
}

Basis parse_basis(std::string_view text) {
  if (text == "Z") return Basis::Z;
  if (text == "X") return Basis::X;
  throw std::invalid_argument("unknown basis '" + std::string(text) + "'");
}

namespace {

double leakage_for(double extinction_ratio_db) {
  if (std::isinf(extinction_ratio_db)) return 0.0;
  return std::pow(10.0, -extinction_ratio_db / 10.0);
}

}  // namespace

double ReceiverConfig::leakage() const { return leakage_for(extinction_ratio_db); }

void ReceiverConfig::validate() const {
  if (!(splitter_ratio > 0.0 && splitter_ratio < 1.0))
    throw std::invalid_argument("receiver.splitter_ratio must lie in (0, 1)");
  if (!(extinction_ratio_db > 0.0))
    throw std::invalid_argument("receiver.extinction_ratio_db must be positive");
}

PortProbabilities project_probability(Polarization incoming, Basis measured,
                                      double extinction_ratio_db) {
  if (basis_of(incoming) != measured) return {0.5, 0.5};
  const double eps = leakage_for(extinction_ratio_db);
  return {1.0 - eps, eps};
}

DetectorCounts route_photons(std::int64_t n_photons, Polarization state,
                             const ReceiverConfig& cfg, Rng& rng) {
  DetectorCounts out{0, 0, 0, 0};
  if (n_photons <= 0) return out;

  const std::int64_t n_z = binomial(rng, n_photons, cfg.splitter_ratio);
  const std::int64_t branch_counts[2] = {n_z, n_photons - n_z};
  const double eps = cfg.leakage();

  for (Basis b : {Basis::Z, Basis::X}) {
    const std::int64_t n = branch_counts[b == Basis::Z ? 0 : 1];
    if (n == 0) continue;
    if (basis_of(state) == b) {
      const std::int64_t right = binomial(rng, n, 1.0 - eps);
      out[detector_index(state)] += right;
      out[detector_index(orthogonal(state))] += n - right;
    } else {
      const std::int64_t zero_port = binomial(rng, n, 0.5);
      out[detector_index(state_for(b, 0))] += zero_port;
      out[detector_index(state_for(b, 1))] += n - zero_port;
    }
  }
  return out;
}

}  // namespace muteqkd
