#include "muteqkd/keyrate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace muteqkd {

std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::no_attack: return "no_attack";
    case Scenario::ideal_attack: return "ideal_attack";
    case Scenario::practical_attack: return "practical_attack";
  }
  return "?";
}

Scenario parse_scenario(std::string_view text) {
  for (Scenario s : kAllScenarios)
    if (to_string(s) == text) return s;
  throw std::invalid_argument("unknown scenario '" + std::string(text) + "'");
}

namespace {

bool is_probability(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

void DecoyParams::validate() const {
  if (!(mu > nu1 && nu1 > nu2 && nu2 >= 0.0))
    throw std::invalid_argument("intensities must satisfy mu > nu1 > nu2 >= 0");
  if (!(f >= 1.0)) throw std::invalid_argument("decoy.f must be >= 1");
  for (double p : {e_det, e0, q_no_attack, q_attack, eta_d, y01, y02, p_dark}) {
    if (!is_probability(p)) throw std::invalid_argument("decoy probabilities must lie in [0, 1]");
  }
  if (!(alpha_db_per_km >= 0.0)) throw std::invalid_argument("attenuation must be >= 0");
  if (!(i_l >= 0.0)) throw std::invalid_argument("decoy.i_l must be >= 0");
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double detect_prob(std::int64_t i, double eta_d) {
  if (i <= 0 || eta_d <= 0.0) return 0.0;
  if (eta_d >= 1.0) return 1.0;
  return -std::expm1(static_cast<double>(i) * std::log1p(-eta_d));
}

double coherent_gain(double lambda, double eta) { return -std::expm1(-eta * lambda); }

double overall_efficiency(double eta_d, double alpha_db_per_km, double distance_km) {
  return eta_d * std::pow(10.0, -alpha_db_per_km * distance_km / 10.0);
}

double ideal_attack_gain(double q_a, double y01, double y02) {
  return 0.25 * y01 + 0.25 * q_a + 0.5 * y02;
}

double ideal_attack_vacuum_error(double y01, double y02) { return 0.25 * y01 + 0.75 * y02; }

double overall_qber(double e0y0, double e_det, double q_a, double q_mu, bool* clamped) {
  if (clamped) *clamped = false;
  if (q_mu <= 0.0) return 0.0;
  const double e = (e0y0 + e_det * q_a) / q_mu;
  const double c = std::clamp(e, 0.0, 1.0);
  if (clamped && c != e) *clamped = true;
  return c;
}

double leakage_gain(double i_l, double eta_d) { return -std::expm1(-i_l * eta_d); }

double practical_attack_gain(double q_a, double q_e, double y01, double y02) {
  return 0.25 * y01 + 0.25 * (q_a + q_e - q_a * q_e) + 0.5 * y02;
}

double practical_attack_vacuum_error(double q_e, double y01, double y02) {
  return 0.25 * y01 + 0.25 * (y02 + q_e - y02 * q_e) + 0.5 * y02;
}

std::string diagnostics_to_string(std::uint32_t flags) {
  static constexpr std::pair<std::uint32_t, const char*> names[] = {
      {kDiagQberClamped, "qber_clamped"},     {kDiagY1NonPositive, "y1_nonpositive"},
      {kDiagY1Clamped, "y1_clamped"},         {kDiagE1Clamped, "e1_clamped"},
      {kDiagQberAboveHalf, "qber_above_half"}, {kDiagRateClamped, "rate_clamped"},
  };
  std::string out;
  for (const auto& [bit, name] : names) {
    if (!(flags & bit)) continue;
    if (!out.empty()) out += '|';
    out += name;
  }
  return out.empty() ? "ok" : out;
}

DecoyBounds decoy_bounds(const std::array<double, 3>& q, const std::array<double, 3>& e, double y0,
                         const DecoyParams& p) {
  const double mu = p.mu, v1 = p.nu1, v2 = p.nu2;
  const double denom = mu * v1 - mu * v2 - v1 * v1 + v2 * v2;
  if (!(mu > v1 && v1 > v2) || denom <= 0.0)
    throw std::invalid_argument("decoy bounds need mu > nu1 > nu2 and mu > nu1 + nu2");

  DecoyBounds b;
  const double qv1 = q[1] * std::exp(v1);
  const double qv2 = q[2] * std::exp(v2);
  const double qmu = q[0] * std::exp(mu);
  double y1 = mu / denom * (qv1 - qv2 - (v1 * v1 - v2 * v2) / (mu * mu) * (qmu - y0));
  if (y1 <= 0.0) {
    b.diagnostics |= kDiagY1NonPositive;
    b.e1_upper = 0.5;
    return b;
  }
  if (y1 > 1.0) {
    y1 = 1.0;
    b.diagnostics |= kDiagY1Clamped;
  }
  double e1 = (e[1] * qv1 - e[2] * qv2) / ((v1 - v2) * y1);
  if (e1 < 0.0 || e1 > 1.0) {
    e1 = std::clamp(e1, 0.0, 1.0);
    b.diagnostics |= kDiagE1Clamped;
  }
  b.y1_lower = y1;
  b.q1_lower = y1 * mu * std::exp(-mu);
  b.e1_upper = e1;
  return b;
}

double secret_key_rate(double q, double q_mu, double e_mu, double q1_lower, double e1_upper,
                       double f, std::uint32_t* diagnostics) {
  std::uint32_t diag = kDiagNone;
  double r = 0.0;
  if (q1_lower <= 0.0) {
    r = 0.0;
  } else if (e_mu >= 0.5 || e1_upper >= 0.5) {
    diag |= kDiagQberAboveHalf;
  } else {
    r = q * (-q_mu * f * binary_entropy(e_mu) + q1_lower * (1.0 - binary_entropy(e1_upper)));
    if (r < 0.0) {
      r = 0.0;
      diag |= kDiagRateClamped;
    }
  }
  if (diagnostics) *diagnostics |= diag;
  return r;
}

ScenarioStatistics scenario_statistics(Scenario s, const DecoyParams& p, double eta) {
  ScenarioStatistics st;
  const auto lambdas = p.intensities();
  const double q_e = leakage_gain(p.i_l, p.eta_d);
  double e0y0 = 0.0;
  switch (s) {
    case Scenario::no_attack:
      st.y0 = 2.0 * p.p_dark;
      e0y0 = p.e0 * st.y0;
      break;
    case Scenario::ideal_attack:
      e0y0 = ideal_attack_vacuum_error(p.y01, p.y02);
      st.y0 = e0y0 / p.e0;
      break;
    case Scenario::practical_attack:
      e0y0 = practical_attack_vacuum_error(q_e, p.y01, p.y02);
      st.y0 = e0y0 / p.e0;
      break;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const double q_a = coherent_gain(lambdas[i], eta);
    switch (s) {
      case Scenario::no_attack: st.q[i] = st.y0 + q_a; break;
      case Scenario::ideal_attack: st.q[i] = ideal_attack_gain(q_a, p.y01, p.y02); break;
      case Scenario::practical_attack:
        st.q[i] = practical_attack_gain(q_a, q_e, p.y01, p.y02);
        break;
    }
    bool clamped = false;
    st.e[i] = overall_qber(e0y0, p.e_det, q_a, st.q[i], &clamped);
    if (clamped) st.diagnostics |= kDiagQberClamped;
  }
  return st;
}

KeyRatePoint evaluate_point(Scenario s, const DecoyParams& p, double distance_km) {
  const double eta = overall_efficiency(p.eta_d, p.alpha_db_per_km, distance_km);
  const ScenarioStatistics st = scenario_statistics(s, p, eta);
  const DecoyBounds b = decoy_bounds(st.q, st.e, st.y0, p);

  KeyRatePoint pt;
  pt.distance_km = distance_km;
  pt.scenario = s;
  pt.q = st.q;
  pt.e = st.e;
  pt.y0 = st.y0;
  pt.y1_lower = b.y1_lower;
  pt.q1_lower = b.q1_lower;
  pt.e1_upper = b.e1_upper;
  pt.diagnostics = st.diagnostics | b.diagnostics;
  pt.r = secret_key_rate(p.q_for(s), st.q[0], st.e[0], b.q1_lower, b.e1_upper, p.f, &pt.diagnostics);
  return pt;
}

std::vector<KeyRatePoint> keyrate_curve(Scenario s, const DecoyParams& params,
                                        std::span<const double> distances) {
  params.validate();
  std::vector<KeyRatePoint> out;
  out.reserve(distances.size());
  for (double d : distances) out.push_back(evaluate_point(s, params, d));
  return out;
}

double cutoff_distance(std::span<const KeyRatePoint> curve) {
  double cutoff = -1.0;
  for (const auto& pt : curve)
    if (pt.r > 0.0) cutoff = std::max(cutoff, pt.distance_km);
  return cutoff;
}

std::vector<double> distance_grid(double max_km, double step_km) {
  if (!(max_km >= 0.0 && step_km > 0.0))
    throw std::invalid_argument("distance grid needs max >= 0 and step > 0");
  std::vector<double> grid;
  const auto n = static_cast<std::int64_t>(std::floor(max_km / step_km + 1e-9));
  for (std::int64_t k = 0; k <= n; ++k) grid.push_back(static_cast<double>(k) * step_km);
  return grid;
}

}  // namespace muteqkd
