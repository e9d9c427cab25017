#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace muteqkd {

enum class Scenario : std::uint8_t { no_attack, ideal_attack, practical_attack };

inline constexpr std::array<Scenario, 3> kAllScenarios{
    Scenario::no_attack, Scenario::ideal_attack, Scenario::practical_attack};

std::string_view to_string(Scenario s);
Scenario parse_scenario(std::string_view text);

/// Inputs of the analytic key-rate model. Intensities are indexed
/// {signal mu, decoy nu1, decoy nu2}.
struct DecoyParams {
  double mu = 0.6;
  double nu1 = 0.1;
  double nu2 = 0.01;
  double f = 1.16;          // error-correction inefficiency
  double e_det = 0.0;       // misalignment; see README for the 0.01 case
  double e0 = 0.5;          // error rate of vacuum clicks
  double q_no_attack = 0.5; // basis sifting
  double q_attack = 1.0;    // every click under attack is in Eve's basis
  double alpha_db_per_km = 0.2;
  double eta_d = 0.206;
  double y01 = 3.2e-8;      // muted-detector click probability per gate
  double y02 = 1.34e-7;     // non-muted detector noise per gate
  double p_dark = 1.5e-7;
  double i_l = 0.015;       // mean photons leaked to the non-muted detector

  std::array<double, 3> intensities() const { return {mu, nu1, nu2}; }
  double q_for(Scenario s) const { return s == Scenario::no_attack ? q_no_attack : q_attack; }
  void validate() const;
};

double binary_entropy(double x);
/// 1 - (1 - eta)^i, accurate when the result is close to 0 or 1.
double detect_prob(std::int64_t i, double eta_d);
/// 1 - exp(-eta * lambda).
double coherent_gain(double lambda, double eta);
/// eta_d * 10^(-alpha L / 10).
double overall_efficiency(double eta_d, double alpha_db_per_km, double distance_km);

double ideal_attack_gain(double q_a, double y01, double y02);
double ideal_attack_vacuum_error(double y01, double y02);
/// (e0Y0 + e_det Q_A) / Q_mu, clamped to [0, 1]. Sets *clamped when it had to.
double overall_qber(double e0y0, double e_det, double q_a, double q_mu, bool* clamped = nullptr);
double leakage_gain(double i_l, double eta_d);
double practical_attack_gain(double q_a, double q_e, double y01, double y02);
double practical_attack_vacuum_error(double q_e, double y01, double y02);

enum Diagnostic : std::uint32_t {
  kDiagNone = 0,
  kDiagQberClamped = 1U << 0,
  kDiagY1NonPositive = 1U << 1,
  kDiagY1Clamped = 1U << 2,
  kDiagE1Clamped = 1U << 3,
  kDiagQberAboveHalf = 1U << 4,
  kDiagRateClamped = 1U << 5,
};

std::string diagnostics_to_string(std::uint32_t flags);

struct DecoyBounds {
  double y1_lower = 0.0;
  double q1_lower = 0.0;
  double e1_upper = 0.0;
  std::uint32_t diagnostics = kDiagNone;
};

/// Two-decoy analytic bounds on the single-photon yield and error rate.
DecoyBounds decoy_bounds(const std::array<double, 3>& q, const std::array<double, 3>& e, double y0,
                         const DecoyParams& params);

/// q * (-Q_mu f H2(E_mu) + Q1 (1 - H2(e1))), floored at 0. Returns 0 when
/// either error rate reaches 1/2, where the entropy terms stop being bounds.
double secret_key_rate(double q, double q_mu, double e_mu, double q1_lower, double e1_upper,
                       double f, std::uint32_t* diagnostics = nullptr);

struct KeyRatePoint {
  double distance_km = 0.0;
  Scenario scenario = Scenario::no_attack;
  std::array<double, 3> q{};
  std::array<double, 3> e{};
  double y0 = 0.0;
  double y1_lower = 0.0;
  double e1_upper = 0.0;
  double q1_lower = 0.0;
  double r = 0.0;
  std::uint32_t diagnostics = kDiagNone;
};

/// Gains and QBERs per intensity for a scenario at overall efficiency eta.
struct ScenarioStatistics {
  std::array<double, 3> q{};
  std::array<double, 3> e{};
  double y0 = 0.0;
  std::uint32_t diagnostics = kDiagNone;
};
ScenarioStatistics scenario_statistics(Scenario s, const DecoyParams& params, double eta);

KeyRatePoint evaluate_point(Scenario s, const DecoyParams& params, double distance_km);
std::vector<KeyRatePoint> keyrate_curve(Scenario s, const DecoyParams& params,
                                        std::span<const double> distances);

/// Largest distance with R > 0, or a negative value if R is 0 everywhere.
double cutoff_distance(std::span<const KeyRatePoint> curve);

/// 0, step, 2 step, ... up to max (inclusive).
std::vector<double> distance_grid(double max_km, double step_km);

}  // namespace muteqkd
