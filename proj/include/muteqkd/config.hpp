#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "muteqkd/attack.hpp"
#include "muteqkd/keyrate.hpp"
#include "muteqkd/optics.hpp"
#include "muteqkd/session.hpp"
#include "muteqkd/spad.hpp"

namespace muteqkd {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class AttackMode : std::uint8_t { off, ideal, practical };
std::string_view to_string(AttackMode m);
AttackMode parse_attack_mode(std::string_view text);

struct SweepConfig {
  double duration_s = 1.0;
  double min_photons = 0.1;
  double max_photons = 5000.0;
  double step_db = 1.0;
  std::int64_t period_gates = 25;
};

struct KeyrateConfig {
  double distance_max_km = 250.0;
  double distance_step_km = 1.0;
  double ratio_distance_km = 5.0;
};

struct MonitorConfig {
  double filter_rate_threshold = -1.0;  // < 0: calibrate from a no-attack run
  double baseline_factor = 10.0;
  std::int64_t calibration_pulses = 200000;
  double pvalue_threshold = 1e-6;
  double score_threshold = 0.5;
  std::int64_t min_clicks = 30;
  std::int64_t period_gates = 0;  // 0: scan 2..100
  bool exclude_signal_gates = true;
};

/// Everything a command needs. Defaults are the shipped model parameters.
struct RunConfig {
  SpadConfig spad;
  ReceiverConfig receiver;
  SourceConfig source;
  ChannelConfig channel;
  AttackMode attack = AttackMode::off;
  AttackPlan plan;  // `enabled` follows `attack`
  DecoyParams decoy;
  SweepConfig sweep;
  KeyrateConfig keyrate;
  MonitorConfig monitor;
  std::uint64_t seed = 1;
  std::int64_t pulses = 1000000;
  std::string out = "out";

  /// Keyrate inputs with intensities, efficiency, dark rate and attenuation
  /// taken from the source, spad and channel sections.
  DecoyParams decoy_params() const;
  AttackPlan attack_plan() const;
  /// The ideal attack assumes perfect polarizers.
  ReceiverConfig effective_receiver() const;
  void validate() const;
};

/// One `section.key` entry of the configuration surface.
struct ConfigKey {
  std::string name;
  std::string help;
  std::function<void(RunConfig&, const std::string&)> set;
  std::function<std::string(const RunConfig&)> get;
};

const std::vector<ConfigKey>& config_keys();

/// Applies `section.key = value`; throws ConfigError for unknown keys or bad values.
void set_config_value(RunConfig& cfg, std::string_view key, const std::string& value);

/// Overlays an INI file (sections and keys as in config_keys()) onto cfg.
void load_config_file(RunConfig& cfg, const std::string& path);

/// INI text of every key, in registry order.
std::string dump_config(const RunConfig& cfg);

}  // namespace muteqkd
