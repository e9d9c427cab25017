// Fits the discriminator threshold, afterpulse prefactor and tail probability
// to two count-rate targets of a pulse train, then checks the fit by Monte
// Carlo. Prints an INI [spad] block.
//
// Per pulse period the detector is live at the pulse (the period exceeds the
// dead time), so
//   rate / f_pulse ~= P_click + P_wide * (afterpulse + tail + dark)
// where the afterpulse term is linear in the prefactor and the tail is tied to
// the afterpulse at the high-intensity target by a fixed ratio.
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "muteqkd/spad.hpp"

namespace {

using muteqkd::SpadConfig;

struct Target {
  double photons;
  double rate;
};

double model_rate(const SpadConfig& c, double photons, double pulse_rate) {
  const auto r = muteqkd::response_for_mean(photons, c);
  return pulse_rate * (r.p_click + r.p_wide * (r.afterpulse_given_wide + c.tail_prob + c.dark_count_prob));
}

// Prefactor and tail matching the high target for a given threshold.
void solve_noise(SpadConfig& c, const Target& high, double ratio, double pulse_rate) {
  SpadConfig unit = c;
  unit.afterpulse_base = 1.0;
  const auto r = muteqkd::response_for_mean(high.photons, unit);
  const double excess = high.rate / pulse_rate - r.p_click - r.p_wide * c.dark_count_prob;
  if (excess <= 0.0) throw std::runtime_error("high target is below the click-plus-dark floor");
  c.afterpulse_base = excess / (r.p_wide * r.afterpulse_given_wide * (1.0 + ratio));
  c.tail_prob = ratio * c.afterpulse_base * r.afterpulse_given_wide;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Calibrate SPAD muting parameters against count-rate targets"};
  Target low{150.0, 134.0}, high{300.0, 32.0};
  double ratio = 2.0 / 3.0;
  std::int64_t period = 25;
  double verify_s = 10.0;
  std::uint64_t seed = 1;
  SpadConfig cfg;
  app.add_option("--low-photons", low.photons, "photons of the first target");
  app.add_option("--low-rate", low.rate, "counts/s of the first target");
  app.add_option("--high-photons", high.photons, "photons of the second target");
  app.add_option("--high-rate", high.rate, "counts/s of the second target");
  app.add_option("--tail-ratio", ratio, "tail / afterpulse probability at the second target");
  app.add_option("--afterpulse-scale", cfg.afterpulse_scale, "afterpulse photon scale");
  app.add_option("--period", period, "gates between pulses");
  app.add_option("--verify", verify_s, "simulated seconds per check, 0 to skip");
  app.add_option("--seed", seed, "seed of the check");
  CLI11_PARSE(app, argc, argv);

  const double pulse_rate = cfg.gate_frequency_hz / static_cast<double>(period);
  // The low target fixes the threshold: more photons below threshold, more clicks.
  double lo = 2.0, hi = 40.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    cfg.wide_threshold = mid;
    solve_noise(cfg, high, ratio, pulse_rate);
    if (model_rate(cfg, low.photons, pulse_rate) > low.rate) hi = mid; else lo = mid;
  }
  cfg.wide_threshold = 0.5 * (lo + hi);
  solve_noise(cfg, high, ratio, pulse_rate);

  std::printf("# fitted on %g photons -> %g Hz and %g photons -> %g Hz, period %lld gates\n",
              low.photons, low.rate, high.photons, high.rate, static_cast<long long>(period));
  std::printf("[spad]\nwide_threshold = %.4f\nafterpulse_base = %.4g\nafterpulse_scale = %g\ntail_prob = %.4g\n",
              cfg.wide_threshold, cfg.afterpulse_base, cfg.afterpulse_scale, cfg.tail_prob);

  if (verify_s > 0.0) {
    std::printf("\n# photons  model_hz  simulated_hz\n");
    for (double n : {0.0, 20.0, low.photons, high.photons, 1000.0, 3000.0, 5000.0}) {
      const auto run = muteqkd::run_pulse_train(cfg, n, period, verify_s, seed, false);
      const double model = n == 0.0 ? cfg.dark_count_prob * cfg.gate_frequency_hz : model_rate(cfg, n, pulse_rate);
      std::printf("# %7g  %9.2f  %12.2f\n", n, model, run.point.counts_per_second);
    }
  }
  return 0;
}
