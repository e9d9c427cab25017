#include "muteqkd/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

namespace muteqkd {

std::string_view to_string(AttackMode m) {
  switch (m) {
    case AttackMode::off: return "off";
    case AttackMode::ideal: return "ideal";
    case AttackMode::practical: return "practical";
  }
  return "?";
}

AttackMode parse_attack_mode(std::string_view text) {
  if (text == "off") return AttackMode::off;
  if (text == "ideal") return AttackMode::ideal;
  if (text == "practical") return AttackMode::practical;
  throw ConfigError("attack mode must be off, ideal or practical, got '" + std::string(text) + "'");
}

DecoyParams RunConfig::decoy_params() const {
  DecoyParams p = decoy;
  p.mu = source.intensities[0];
  p.nu1 = source.intensities[1];
  p.nu2 = source.intensities[2];
  p.eta_d = spad.detection_efficiency;
  p.p_dark = spad.dark_count_prob;
  p.alpha_db_per_km = channel.attenuation_db_per_km;
  return p;
}

AttackPlan RunConfig::attack_plan() const {
  AttackPlan p = plan;
  p.enabled = attack != AttackMode::off;
  return p;
}

ReceiverConfig RunConfig::effective_receiver() const {
  ReceiverConfig r = receiver;
  if (attack == AttackMode::ideal) r.extinction_ratio_db = INFINITY;
  return r;
}

void RunConfig::validate() const {
  try {
    spad.validate();
    receiver.validate();
    source.validate();
    channel.validate();
    decoy_params().validate();
    if (attack != AttackMode::off) attack_plan().validate(spad);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (pulses < 1) throw ConfigError("run.pulses must be >= 1");
  if (!(sweep.duration_s > 0.0)) throw ConfigError("sweep.duration_s must be positive");
  if (sweep.period_gates < 1) throw ConfigError("sweep.period_gates must be >= 1");
  if (!(keyrate.distance_step_km > 0.0)) throw ConfigError("keyrate.distance_step_km must be positive");
  if (monitor.min_clicks < 1) throw ConfigError("monitor.min_clicks must be >= 1");
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_as(const std::string& raw);

template <>
double parse_as<double>(const std::string& raw) {
  const std::string s = trim(raw);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || std::isnan(v))
    throw ConfigError("not a number: '" + raw + "'");
  return v;
}

template <>
std::int64_t parse_as<std::int64_t>(const std::string& raw) {
  const std::string s = trim(raw);
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE)
    throw ConfigError("not an integer: '" + raw + "'");
  return v;
}

template <>
std::uint64_t parse_as<std::uint64_t>(const std::string& raw) {
  const std::string s = trim(raw);
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(s.c_str(), &end, 0);
  if (s.empty() || s[0] == '-' || end != s.c_str() + s.size() || errno == ERANGE)
    throw ConfigError("not an unsigned integer: '" + raw + "'");
  return v;
}

template <>
bool parse_as<bool>(const std::string& raw) {
  const std::string s = trim(raw);
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ConfigError("not a boolean: '" + raw + "'");
}

template <>
std::string parse_as<std::string>(const std::string& raw) {
  return trim(raw);
}

std::string format_value(double v) { return fmt::format("{}", v); }
std::string format_value(std::int64_t v) { return fmt::format("{}", v); }
std::string format_value(std::uint64_t v) { return fmt::format("{}", v); }
std::string format_value(bool v) { return v ? "true" : "false"; }
std::string format_value(const std::string& v) { return v; }

template <typename T, typename Access>
ConfigKey field(std::string name, std::string help, Access access) {
  return ConfigKey{
      std::move(name), std::move(help),
      [access](RunConfig& c, const std::string& v) { access(c) = parse_as<T>(v); },
      [access](const RunConfig& c) { return format_value(access(const_cast<RunConfig&>(c))); }};
}

#define MQ_FIELD(T, NAME, HELP, EXPR) \
  field<T>(NAME, HELP, [](RunConfig& c) -> T& { return EXPR; })

std::vector<ConfigKey> build_keys() {
  std::vector<ConfigKey> k;
  k.push_back(MQ_FIELD(std::uint64_t, "run.seed", "master random seed", c.seed));
  k.push_back(MQ_FIELD(std::int64_t, "run.pulses", "signal pulses per session", c.pulses));
  k.push_back(MQ_FIELD(std::string, "run.out", "output directory", c.out));
  k.push_back(ConfigKey{"run.attack", "attack mode: off, ideal or practical",
                        [](RunConfig& c, const std::string& v) { c.attack = parse_attack_mode(trim(v)); },
                        [](const RunConfig& c) { return std::string(to_string(c.attack)); }});

  k.push_back(MQ_FIELD(double, "spad.gate_frequency_hz", "gate rate", c.spad.gate_frequency_hz));
  k.push_back(MQ_FIELD(std::int64_t, "spad.dead_time_gates", "dead time in gates", c.spad.dead_time_gates));
  k.push_back(MQ_FIELD(double, "spad.detection_efficiency", "detection efficiency", c.spad.detection_efficiency));
  k.push_back(MQ_FIELD(double, "spad.dark_count_prob", "dark count probability per gate", c.spad.dark_count_prob));
  k.push_back(MQ_FIELD(double, "spad.wide_threshold", "detected photons for a filtered avalanche", c.spad.wide_threshold));
  k.push_back(MQ_FIELD(double, "spad.afterpulse_base", "afterpulse prefactor", c.spad.afterpulse_base));
  k.push_back(MQ_FIELD(double, "spad.afterpulse_scale", "afterpulse photon scale", c.spad.afterpulse_scale));
  k.push_back(MQ_FIELD(double, "spad.tail_prob", "tail pulse probability per filtered avalanche", c.spad.tail_prob));

  k.push_back(MQ_FIELD(double, "receiver.splitter_ratio", "fraction sent to the Z branch", c.receiver.splitter_ratio));
  k.push_back(MQ_FIELD(double, "receiver.extinction_ratio_db", "PBS extinction ratio (inf allowed)", c.receiver.extinction_ratio_db));

  k.push_back(MQ_FIELD(double, "source.mu", "signal intensity", c.source.intensities[0]));
  k.push_back(MQ_FIELD(double, "source.nu1", "first decoy intensity", c.source.intensities[1]));
  k.push_back(MQ_FIELD(double, "source.nu2", "second decoy intensity", c.source.intensities[2]));
  k.push_back(MQ_FIELD(double, "source.p_mu", "signal probability weight", c.source.probabilities[0]));
  k.push_back(MQ_FIELD(double, "source.p_nu1", "first decoy probability weight", c.source.probabilities[1]));
  k.push_back(MQ_FIELD(double, "source.p_nu2", "second decoy probability weight", c.source.probabilities[2]));
  k.push_back(MQ_FIELD(std::int64_t, "source.pulse_period_gates", "gates between signal pulses", c.source.pulse_period_gates));
  k.push_back(MQ_FIELD(double, "source.misalignment", "probability of sending the orthogonal state", c.source.misalignment));

  k.push_back(MQ_FIELD(double, "channel.attenuation_db_per_km", "fiber loss", c.channel.attenuation_db_per_km));
  k.push_back(MQ_FIELD(double, "channel.distance_km", "session fiber length", c.channel.distance_km));

  k.push_back(MQ_FIELD(std::int64_t, "attack.period_gates", "gates between hacking pulses", c.plan.period_gates));
  k.push_back(MQ_FIELD(double, "attack.photons_per_pulse", "mean hacking photons at the receiver", c.plan.photons_per_pulse));
  k.push_back(MQ_FIELD(std::uint64_t, "attack.state_seed", "seed of the hacking state sequence", c.plan.state_seed));

  k.push_back(MQ_FIELD(double, "decoy.f", "error-correction inefficiency", c.decoy.f));
  k.push_back(MQ_FIELD(double, "decoy.e_det", "misalignment error in the key-rate model", c.decoy.e_det));
  k.push_back(MQ_FIELD(double, "decoy.e0", "vacuum error rate", c.decoy.e0));
  k.push_back(MQ_FIELD(double, "decoy.q_no_attack", "sifting factor without attack", c.decoy.q_no_attack));
  k.push_back(MQ_FIELD(double, "decoy.q_attack", "sifting factor under attack", c.decoy.q_attack));
  k.push_back(MQ_FIELD(double, "decoy.y01", "muted detector noise per gate", c.decoy.y01));
  k.push_back(MQ_FIELD(double, "decoy.y02", "non-muted detector noise per gate", c.decoy.y02));
  k.push_back(MQ_FIELD(double, "decoy.i_l", "mean leaked photons per hacking pulse", c.decoy.i_l));

  k.push_back(MQ_FIELD(double, "sweep.duration_s", "simulated time per intensity", c.sweep.duration_s));
  k.push_back(MQ_FIELD(double, "sweep.min_photons", "lowest swept intensity", c.sweep.min_photons));
  k.push_back(MQ_FIELD(double, "sweep.max_photons", "highest swept intensity", c.sweep.max_photons));
  k.push_back(MQ_FIELD(double, "sweep.step_db", "grid step in dB", c.sweep.step_db));
  k.push_back(MQ_FIELD(std::int64_t, "sweep.period_gates", "gates between test pulses", c.sweep.period_gates));

  k.push_back(MQ_FIELD(double, "keyrate.distance_max_km", "last distance of the curve", c.keyrate.distance_max_km));
  k.push_back(MQ_FIELD(double, "keyrate.distance_step_km", "distance step", c.keyrate.distance_step_km));
  k.push_back(MQ_FIELD(double, "keyrate.ratio_distance_km", "distance of the reported rate ratio", c.keyrate.ratio_distance_km));

  k.push_back(MQ_FIELD(double, "monitor.filter_rate_threshold", "per-detector filtered rate limit, < 0 to calibrate", c.monitor.filter_rate_threshold));
  k.push_back(MQ_FIELD(double, "monitor.baseline_factor", "calibrated limit as a multiple of the baseline", c.monitor.baseline_factor));
  k.push_back(MQ_FIELD(std::int64_t, "monitor.calibration_pulses", "pulses of the calibration run", c.monitor.calibration_pulses));
  k.push_back(MQ_FIELD(double, "monitor.pvalue_threshold", "periodicity p-value limit", c.monitor.pvalue_threshold));
  k.push_back(MQ_FIELD(double, "monitor.score_threshold", "two-peak score limit", c.monitor.score_threshold));
  k.push_back(MQ_FIELD(std::int64_t, "monitor.min_clicks", "fewest clicks for a periodicity verdict", c.monitor.min_clicks));
  k.push_back(MQ_FIELD(std::int64_t, "monitor.period_gates", "known period, 0 to scan 2..100", c.monitor.period_gates));
  k.push_back(MQ_FIELD(bool, "monitor.exclude_signal_gates", "ignore clicks on signal gates", c.monitor.exclude_signal_gates));
  return k;
}

#undef MQ_FIELD

}  // namespace

const std::vector<ConfigKey>& config_keys() {
  static const std::vector<ConfigKey> keys = build_keys();
  return keys;
}

void set_config_value(RunConfig& cfg, std::string_view key, const std::string& value) {
  for (const auto& k : config_keys()) {
    if (k.name != key) continue;
    try {
      k.set(cfg, value);
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(key) + ": " + e.what());
    }
    return;
  }
  throw ConfigError("unknown configuration key '" + std::string(key) + "'");
}

void load_config_file(RunConfig& cfg, const std::string& path) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(path, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(e.what());
  }
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty())
      throw ConfigError(path + ": key '" + section + "' outside a section");
    for (const auto& [key, value] : body) {
      set_config_value(cfg, section + "." + key, value.get_value<std::string>());
    }
  }
}

std::string dump_config(const RunConfig& cfg) {
  std::string out;
  std::string section;
  for (const auto& k : config_keys()) {
    const auto dot = k.name.find('.');
    const std::string s = k.name.substr(0, dot);
    if (s != section) {
      if (!section.empty()) out += '\n';
      out += "[" + s + "]\n";
      section = s;
    }
    out += k.name.substr(dot + 1) + " = " + k.get(cfg) + '\n';
  }
  return out;
}

}  // namespace muteqkd
