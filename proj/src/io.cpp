#include "muteqkd/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include <fmt/format.h>

namespace muteqkd {

CsvError::CsvError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(fmt::format("{}:{}: {}", source, line, what)), line_(line) {}

namespace {

// Buffered output; click logs run to millions of rows.
class Writer {
 public:
  explicit Writer(std::ostream& os) : os_(os) {}
  ~Writer() { flush(); }
  template <typename... Args>
  void row(fmt::format_string<Args...> f, Args&&... args) {
    fmt::format_to(std::back_inserter(buf_), f, std::forward<Args>(args)...);
    buf_.push_back('\n');
    if (buf_.size() > (1U << 16)) flush();
  }
  void flush() {
    os_.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
    buf_.clear();
  }

 private:
  std::ostream& os_;
  fmt::memory_buffer buf_;
};

std::string bit_text(const std::optional<int>& b) { return b ? std::to_string(*b) : "unknown"; }

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

// Reads lines, stripping a trailing CR; returns false at EOF.
bool next_line(std::istream& is, std::string& line, std::size_t& number) {
  if (!std::getline(is, line)) return false;
  ++number;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace

void write_clicks_csv(std::ostream& os, std::span<const ClickRecord> records) {
  Writer w(os);
  w.row("gate,detector,cause,phase");
  for (const auto& r : records) w.row("{},{},{},{}", r.gate, r.detector, to_string(r.cause), r.phase);
}

void write_inferences_csv(std::ostream& os, std::span<const InferenceRecord> records) {
  Writer w(os);
  w.row("gate,announced_basis,eve_state,inferred_bit");
  for (const auto& r : records) {
    w.row("{},{},{},{}", r.gate, to_string(r.announced_basis), to_string(r.eve_state),
          bit_text(r.inferred_bit));
  }
}

void write_tally_csv(std::ostream& os, const SessionTally& tally, const SourceConfig& source) {
  Writer w(os);
  std::string header =
      "intensity_index,intensity,basis,sent,clicked,sifted,errors,eve_correct,double_same,"
      "double_cross,gain,sifted_gain,qber";
  for (std::size_t o = 0; o < kOriginCount; ++o)
    header += fmt::format(",sifted_{}", to_string(static_cast<ClickOrigin>(o)));
  for (std::size_t o = 0; o < kOriginCount; ++o)
    header += fmt::format(",errors_{}", to_string(static_cast<ClickOrigin>(o)));
  w.row("{}", header);
  const auto ratio = [](std::int64_t a, std::int64_t b) {
    return b > 0 ? static_cast<double>(a) / static_cast<double>(b) : 0.0;
  };
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t b = 0; b < 2; ++b) {
      const CellTally& c = tally.cells[i][b];
      std::string row = fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}", i, source.intensities[i],
                                    b == 0 ? "Z" : "X", c.sent, c.clicked, c.sifted, c.errors,
                                    c.eve_correct, c.double_same, c.double_cross,
                                    ratio(c.clicked, c.sent), ratio(c.sifted, c.sent),
                                    ratio(c.errors, c.sifted));
      for (auto v : c.sifted_by_origin) row += fmt::format(",{}", v);
      for (auto v : c.errors_by_origin) row += fmt::format(",{}", v);
      w.row("{}", row);
    }
  }
}

void write_sweep_csv(std::ostream& os, std::span<const SweepPoint> points) {
  Writer w(os);
  w.row("photons,counts_per_second,clicks,wide_avalanches,pulses");
  for (const auto& p : points)
    w.row("{},{},{},{},{}", p.photons, p.counts_per_second, p.clicks, p.wide_avalanches, p.pulses);
}

void write_keyrate_csv(std::ostream& os, std::span<const KeyRatePoint> points) {
  Writer w(os);
  w.row("distance_km,scenario,Q_mu,E_mu,Y1_lower,e1_upper,R,Q_nu1,Q_nu2,E_nu1,E_nu2,Q1_lower,"
        "diagnostics");
  for (const auto& p : points) {
    w.row("{},{},{},{},{},{},{},{},{},{},{},{},{}", p.distance_km, to_string(p.scenario), p.q[0],
          p.e[0], p.y1_lower, p.e1_upper, p.r, p.q[1], p.q[2], p.e[1], p.e[2], p.q1_lower,
          diagnostics_to_string(p.diagnostics));
  }
}

void write_monitor_csv(std::ostream& os, const MonitorReport& r) {
  Writer w(os);
  w.row("wide_avalanche_rate,filter_rate_threshold,filter_flag,phase_uniformity_pvalue,"
        "two_peak_score,period,clicks_analysed,pvalue_threshold,score_threshold,periodicity_flag,"
        "alarm");
  w.row("{},{},{},{},{},{},{},{},{},{},{}", r.wide_avalanche_rate, r.thresholds.filter_rate_per_s,
        r.filter_flag ? 1 : 0,
        r.phase_uniformity_pvalue ? fmt::format("{}", *r.phase_uniformity_pvalue) : "NA",
        r.two_peak_score, r.period, r.clicks_analysed, r.thresholds.periodicity.pvalue,
        r.thresholds.periodicity.score, r.periodicity_flag ? 1 : 0, r.alarm ? 1 : 0);
}

void write_discriminator_csv(std::ostream& os, const DiscriminatorLog& log) {
  Writer w(os);
  w.row("detector,wide_avalanches,duration_s,signal_period_gates");
  for (std::size_t d = 0; d < 4; ++d)
    w.row("{},{},{},{}", d, log.wide_avalanches[d], log.duration_s, log.signal_period_gates);
}

DiscriminatorLog read_discriminator_csv(std::istream& is, const std::string& source) {
  std::string line;
  std::size_t n = 0;
  if (!next_line(is, line, n) || line != "detector,wide_avalanches,duration_s,signal_period_gates")
    throw CsvError(source, 1, "expected discriminator header");
  DiscriminatorLog log;
  std::array<bool, 4> seen{};
  while (next_line(is, line, n)) {
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 4) throw CsvError(source, n, "expected 4 fields");
    int d = -1;
    std::int64_t wide = 0, period = 0;
    double duration = 0.0;
    if (!parse_number(f[0], d) || d < 0 || d > 3) throw CsvError(source, n, "bad detector");
    if (!parse_number(f[1], wide) || wide < 0) throw CsvError(source, n, "bad wide_avalanches");
    if (!parse_number(f[2], duration) || !(duration > 0.0)) throw CsvError(source, n, "bad duration_s");
    if (!parse_number(f[3], period) || period < 0) throw CsvError(source, n, "bad signal_period_gates");
    if (seen[static_cast<std::size_t>(d)]) throw CsvError(source, n, "duplicate detector");
    seen[static_cast<std::size_t>(d)] = true;
    log.wide_avalanches[static_cast<std::size_t>(d)] = wide;
    log.duration_s = duration;
    log.signal_period_gates = period;
  }
  if (log.duration_s <= 0.0) throw CsvError(source, n, "no detector rows");
  return log;
}

std::vector<ClickRecord> read_clicks_csv(std::istream& is, const std::string& source) {
  std::string line;
  std::size_t n = 0;
  if (!next_line(is, line, n)) throw CsvError(source, 1, "empty file, expected a header");
  if (line != "gate,detector,cause,phase")
    throw CsvError(source, n, "expected header 'gate,detector,cause,phase'");
  std::vector<ClickRecord> out;
  while (next_line(is, line, n)) {
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 4) throw CsvError(source, n, fmt::format("expected 4 fields, got {}", f.size()));
    ClickRecord r;
    if (!parse_number(f[0], r.gate) || r.gate < 0) throw CsvError(source, n, "bad gate");
    if (!parse_number(f[1], r.detector) || r.detector < 0 || r.detector > 3)
      throw CsvError(source, n, "bad detector");
    try {
      r.cause = parse_click_cause(f[2]);
    } catch (const std::invalid_argument& e) {
      throw CsvError(source, n, e.what());
    }
    if (!parse_number(f[3], r.phase) || r.phase < 0) throw CsvError(source, n, "bad phase");
    out.push_back(r);
  }
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream os(p, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os << contents;
}

}  // namespace muteqkd
