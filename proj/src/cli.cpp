#include "muteqkd/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "muteqkd/io.hpp"
#include "muteqkd/keyrate.hpp"
#include "muteqkd/monitor.hpp"
#include "muteqkd/session.hpp"
#include "muteqkd/spad.hpp"

namespace muteqkd {

namespace {

std::string out_path(const RunConfig& cfg, const std::string& name) {
  return (std::filesystem::path(cfg.out) / name).string();
}

template <typename Fn>
void write_csv(const std::string& path, Fn&& fn) {
  std::ostringstream os;
  fn(os);
  write_file(path, os.str());
}

std::array<SpadConfig, 4> four(const SpadConfig& s) { return {s, s, s, s}; }

}  // namespace

int cmd_sweep(const RunConfig& cfg, std::ostream& log) {
  const std::array<double, 2> anchors{150.0, 300.0};
  std::vector<double> grid{0.0};
  const auto logs = log_photon_grid(cfg.sweep.min_photons, cfg.sweep.max_photons, cfg.sweep.step_db, anchors);
  grid.insert(grid.end(), logs.begin(), logs.end());
  const auto points =
      run_intensity_sweep(cfg.spad, grid, cfg.sweep.period_gates, cfg.sweep.duration_s, cfg.seed);
  const auto path = out_path(cfg, "sweep.csv");
  write_csv(path, [&](std::ostream& os) { write_sweep_csv(os, points); });

  log << fmt::format("sweep: {} intensities, {} s each, period {} gates -> {}\n", points.size(),
                     cfg.sweep.duration_s, cfg.sweep.period_gates, path);
  for (const auto& p : points) {
    if (p.photons == 0.0 || p.photons == 150.0 || p.photons == 300.0)
      log << fmt::format("  {:>8g} photons: {:.1f} counts/s\n", p.photons, p.counts_per_second);
  }
  return kExitOk;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& log) {
  const AttackPlan plan = cfg.attack_plan();
  const auto result = run_session(cfg.source, cfg.channel, cfg.effective_receiver(), four(cfg.spad),
                                  plan, cfg.pulses, cfg.seed);
  write_csv(out_path(cfg, "tally.csv"),
            [&](std::ostream& os) { write_tally_csv(os, result.tally, cfg.source); });
  write_csv(out_path(cfg, "clicks.csv"), [&](std::ostream& os) { write_clicks_csv(os, result.clicks); });
  write_csv(out_path(cfg, "inferences.csv"),
            [&](std::ostream& os) { write_inferences_csv(os, result.inferences); });
  DiscriminatorLog disc;
  disc.duration_s = result.duration_s;
  disc.signal_period_gates = cfg.source.pulse_period_gates;
  disc.wide_avalanches = result.tally.wide_avalanches;
  write_csv(out_path(cfg, "discriminator.csv"),
            [&](std::ostream& os) { write_discriminator_csv(os, disc); });

  log << fmt::format("simulate: {} pulses, attack {}, {} km, seed {} -> {}\n", cfg.pulses,
                     to_string(cfg.attack), cfg.channel.distance_km, cfg.seed, cfg.out);
  const char* names[3] = {"mu", "nu1", "nu2"};
  for (std::size_t i = 0; i < 3; ++i) {
    const CellTally c = result.tally.intensity_total(i);
    const auto frac = [](std::int64_t a, std::int64_t b) {
      return b > 0 ? static_cast<double>(a) / static_cast<double>(b) : 0.0;
    };
    log << fmt::format("  {:<3} sent {:>9}  gain {:.6e}  sifted gain {:.6e}  QBER {:.6f}\n", names[i],
                       c.sent, frac(c.clicked, c.sent), frac(c.sifted, c.sent),
                       frac(c.errors, c.sifted));
  }
  if (plan.enabled) {
    const auto all = eve_knowledge_fraction(result.tally);
    const auto sig = eve_knowledge_fraction(result.tally, ClickOrigin::signal_photon);
    log << fmt::format("  Eve knowledge fraction: {} (signal-photon clicks: {})\n",
                       all ? fmt::format("{:.6f}", *all) : "undefined",
                       sig ? fmt::format("{:.6f}", *sig) : "undefined");
  }
  return kExitOk;
}

int cmd_keyrate(const RunConfig& cfg, std::ostream& log) {
  const DecoyParams params = cfg.decoy_params();
  const auto grid = distance_grid(cfg.keyrate.distance_max_km, cfg.keyrate.distance_step_km);
  std::vector<KeyRatePoint> all;
  std::array<double, 3> cutoffs{};
  for (std::size_t s = 0; s < kAllScenarios.size(); ++s) {
    const auto curve = keyrate_curve(kAllScenarios[s], params, grid);
    cutoffs[s] = cutoff_distance(curve);
    all.insert(all.end(), curve.begin(), curve.end());
  }
  std::stable_sort(all.begin(), all.end(), [](const KeyRatePoint& a, const KeyRatePoint& b) {
    return a.distance_km < b.distance_km;
  });
  const auto path = out_path(cfg, "keyrate.csv");
  write_csv(path, [&](std::ostream& os) { write_keyrate_csv(os, all); });

  log << fmt::format("keyrate: {} distances x 3 scenarios -> {}\n", grid.size(), path);
  for (std::size_t s = 0; s < 3; ++s) {
    log << fmt::format("  cutoff {:<17} {}\n", to_string(kAllScenarios[s]),
                       cutoffs[s] < 0 ? std::string("none") : fmt::format("{:g} km", cutoffs[s]));
  }
  log << fmt::format("  ideal-attack extension: {:g} km\n", cutoffs[1] - cutoffs[0]);
  const double d = cfg.keyrate.ratio_distance_km;
  const double r0 = evaluate_point(Scenario::no_attack, params, d).r;
  const double r1 = evaluate_point(Scenario::ideal_attack, params, d).r;
  log << fmt::format("  R(ideal)/R(none) at {:g} km: {}\n", d,
                     r0 > 0.0 ? fmt::format("{:.4f}", r1 / r0) : std::string("undefined"));
  return kExitOk;
}

double monitor_filter_threshold(const RunConfig& cfg) {
  if (cfg.monitor.filter_rate_threshold >= 0.0) return cfg.monitor.filter_rate_threshold;
  AttackPlan off = cfg.plan;
  off.enabled = false;
  SessionOptions opts;
  opts.record_clicks = false;
  opts.record_inferences = false;
  const auto base = run_session(cfg.source, cfg.channel, cfg.receiver, four(cfg.spad), off,
                                cfg.monitor.calibration_pulses, derive_seed(cfg.seed, 0xca1b), opts);
  const auto busiest = *std::max_element(base.tally.wide_avalanches.begin(), base.tally.wide_avalanches.end());
  return filter_threshold_from_baseline(static_cast<double>(busiest) / base.duration_s,
                                        cfg.monitor.baseline_factor);
}

int cmd_monitor(const RunConfig& cfg, const std::string& clicks_path,
                const std::optional<std::string>& discriminator_path, std::ostream& log) {
  std::ifstream in(clicks_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + clicks_path);
  const auto clicks = read_clicks_csv(in, clicks_path);

  const std::string disc_path =
      discriminator_path.value_or((std::filesystem::path(clicks_path).parent_path() / "discriminator.csv").string());
  std::optional<DiscriminatorLog> disc;
  if (std::ifstream din(disc_path, std::ios::binary); din) {
    disc = read_discriminator_csv(din, disc_path);
  } else if (discriminator_path) {
    throw std::runtime_error("cannot open " + disc_path);
  }

  MonitorThresholds th;
  th.filter_rate_per_s = monitor_filter_threshold(cfg);
  th.periodicity = {cfg.monitor.pvalue_threshold, cfg.monitor.score_threshold, cfg.monitor.min_clicks};
  th.period = cfg.monitor.period_gates;

  std::int64_t signal_period = 0;
  if (cfg.monitor.exclude_signal_gates)
    signal_period = disc && disc->signal_period_gates > 0 ? disc->signal_period_gates
                                                          : cfg.source.pulse_period_gates;
  std::array<std::int64_t, 4> wide{};
  double duration = 1.0;
  if (disc) {
    wide = disc->wide_avalanches;
    duration = disc->duration_s;
  }
  const MonitorReport rep = analyse(clicks, wide, duration, signal_period, th);
  const auto path = out_path(cfg, "monitor.csv");
  write_csv(path, [&](std::ostream& os) { write_monitor_csv(os, rep); });

  log << fmt::format("monitor: {} clicks from {}\n", clicks.size(), clicks_path);
  if (disc) {
    log << fmt::format("  filtered avalanches: {:.4g} /s per detector (limit {:.4g}) -> {}\n",
                       rep.wide_avalanche_rate, th.filter_rate_per_s, rep.filter_flag ? "FLAG" : "ok");
  } else {
    log << "  no discriminator log; filter-rate test skipped\n";
  }
  if (rep.phase_uniformity_pvalue) {
    log << fmt::format("  phase test: period {} gates, {} clicks, p = {:.3g}, two-peak score {:.3f} -> {}\n",
                       rep.period, rep.clicks_analysed, *rep.phase_uniformity_pvalue,
                       rep.two_peak_score, rep.periodicity_flag ? "FLAG" : "ok");
  } else {
    log << fmt::format("  phase test: inconclusive ({} clicks)\n", rep.clicks_analysed);
  }
  log << fmt::format("  alarm: {}  -> {}\n", rep.alarm ? "RAISED" : "no", path);
  return rep.alarm ? kExitAlarm : kExitOk;
}

}  // namespace muteqkd
