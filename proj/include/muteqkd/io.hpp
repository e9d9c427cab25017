#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "muteqkd/attack.hpp"
#include "muteqkd/keyrate.hpp"
#include "muteqkd/monitor.hpp"
#include "muteqkd/session.hpp"
#include "muteqkd/spad.hpp"

namespace muteqkd {

class CsvError : public std::runtime_error {
 public:
  CsvError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Writers emit a header row and LF line endings.
void write_clicks_csv(std::ostream& os, std::span<const ClickRecord> records);
void write_inferences_csv(std::ostream& os, std::span<const InferenceRecord> records);
void write_tally_csv(std::ostream& os, const SessionTally& tally, const SourceConfig& source);
void write_sweep_csv(std::ostream& os, std::span<const SweepPoint> points);
void write_keyrate_csv(std::ostream& os, std::span<const KeyRatePoint> points);
void write_monitor_csv(std::ostream& os, const MonitorReport& report);

/// Discriminator log of a session: filtered avalanches per detector over the
/// session duration, consumed by the filter-rate test.
struct DiscriminatorLog {
  double duration_s = 0.0;
  std::int64_t signal_period_gates = 0;
  std::array<std::int64_t, 4> wide_avalanches{};
};
void write_discriminator_csv(std::ostream& os, const DiscriminatorLog& log);
DiscriminatorLog read_discriminator_csv(std::istream& is, const std::string& source = "<stream>");

/// Parses the click CSV written by write_clicks_csv. Errors carry the line number.
std::vector<ClickRecord> read_clicks_csv(std::istream& is, const std::string& source = "<stream>");

/// Opens `path` for writing, creating parent directories.
void write_file(const std::string& path, const std::string& contents);

}  // namespace muteqkd
