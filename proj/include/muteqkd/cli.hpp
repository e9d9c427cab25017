#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "muteqkd/config.hpp"

namespace muteqkd {

/// Exit codes shared by the commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitAlarm = 2;

/// Intensity sweep on the configured grid (plus the dark-only point and the
/// 150 and 300 photon anchors); writes <out>/sweep.csv.
int cmd_sweep(const RunConfig& cfg, std::ostream& log);

/// One session; writes tally.csv, clicks.csv, inferences.csv and
/// discriminator.csv under <out>.
int cmd_simulate(const RunConfig& cfg, std::ostream& log);

/// All three key-rate curves; writes <out>/keyrate.csv.
int cmd_keyrate(const RunConfig& cfg, std::ostream& log);

/// Monitor verdict on a click log. The discriminator log defaults to
/// discriminator.csv next to the click log and is optional. Returns kExitAlarm
/// when the alarm is raised.
int cmd_monitor(const RunConfig& cfg, const std::string& clicks_path,
                const std::optional<std::string>& discriminator_path, std::ostream& log);

/// Filter-rate threshold used by cmd_monitor: the configured value, or the
/// baseline factor times the busiest detector's rate in a no-attack run.
double monitor_filter_threshold(const RunConfig& cfg);

}  // namespace muteqkd
