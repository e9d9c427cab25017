// muteqkd: simulate and analyse the muted attack on a gated-SPAD BB84 receiver.
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "muteqkd/cli.hpp"
#include "muteqkd/config.hpp"
#include "muteqkd/io.hpp"

namespace {

struct CommonFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> attack;
  std::optional<std::int64_t> pulses;
  std::optional<double> distance_max;
  std::map<std::string, std::string> keys;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config, "INI configuration file")->check(CLI::ExistingFile);
  cmd->add_option("--seed", f.seed, "master random seed");
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_option("--attack", f.attack, "attack mode")->check(CLI::IsMember({"off", "ideal", "practical"}));
  cmd->add_option("--pulses", f.pulses, "signal pulses per session")->check(CLI::PositiveNumber);
  cmd->add_option("--distance-max", f.distance_max, "last key-rate distance in km")->check(CLI::NonNegativeNumber);
  auto* group = cmd->add_option_group("configuration keys");
  for (const auto& key : muteqkd::config_keys()) {
    group->add_option_function<std::string>(
        "--" + key.name, [&f, name = key.name](const std::string& v) { f.keys[name] = v; }, key.help);
  }
}

// Precedence: flags > file > defaults.
muteqkd::RunConfig resolve(const CommonFlags& f) {
  muteqkd::RunConfig cfg;
  if (!f.config.empty()) muteqkd::load_config_file(cfg, f.config);
  for (const auto& [name, value] : f.keys) muteqkd::set_config_value(cfg, name, value);
  if (f.seed) cfg.seed = *f.seed;
  if (f.out) cfg.out = *f.out;
  if (f.attack) cfg.attack = muteqkd::parse_attack_mode(*f.attack);
  if (f.pulses) cfg.pulses = *f.pulses;
  if (f.distance_max) cfg.keyrate.distance_max_km = *f.distance_max;
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Muted-attack simulator for a passive-basis BB84 receiver with gated SPADs"};
  app.require_subcommand(1);

  CommonFlags flags;
  auto* sweep = app.add_subcommand("sweep", "count rate of one SPAD against pulse intensity");
  auto* simulate = app.add_subcommand("simulate", "event-level BB84 session");
  auto* keyrate = app.add_subcommand("keyrate", "analytic key-rate curves for all scenarios");
  auto* monitor = app.add_subcommand("monitor", "countermeasure tests on a click log");
  std::string clicks_path;
  std::optional<std::string> disc_path;
  monitor->add_option("clicks", clicks_path, "click CSV")->required();
  monitor->add_option("--discriminator", disc_path, "discriminator CSV (default: next to the click log)");
  for (auto* cmd : {sweep, simulate, keyrate, monitor}) add_common(cmd, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    const muteqkd::RunConfig cfg = resolve(flags);
    if (sweep->parsed()) return muteqkd::cmd_sweep(cfg, std::cout);
    if (simulate->parsed()) return muteqkd::cmd_simulate(cfg, std::cout);
    if (keyrate->parsed()) return muteqkd::cmd_keyrate(cfg, std::cout);
    return muteqkd::cmd_monitor(cfg, clicks_path, disc_path, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "muteqkd: " << e.what() << '\n';
    return muteqkd::kExitError;
  }
}
