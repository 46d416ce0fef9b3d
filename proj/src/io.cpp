#include "dgeo/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "dgeo/errors.hpp"

namespace dgeo {

namespace {

constexpr const char* kSeparator = "---------------------------------------------";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find('\t', start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

const char* kind_name(ApsisKind k) {
  return k == ApsisKind::kPerihelion ? "perihelion" : "aphelion";
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 40> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw Error("double formatting failed");
  return std::string(buf.data(), end);
}

std::optional<double> try_parse_double(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<std::int64_t> try_parse_int64(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

void write_series_table(std::ostream& os, std::span<const OrbitSample> series,
                        const Trajectory* traj) {
  os << "step\tt_cm\tx_cm\ty_cm\tr_cm\tangle_deg\tspeed_c\tdeviation\tdescent_iters\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const OrbitSample& s = series[i];
    os << i << '\t' << format_double(s.t_cm) << '\t' << format_double(s.x_cm) << '\t'
       << format_double(s.y_cm) << '\t' << format_double(s.r_cm) << '\t';
    if (s.angle_deg) os << format_double(*s.angle_deg);
    os << '\t' << format_double(s.speed_c) << '\t';
    const StepRecord* rec = nullptr;
    if (traj && i >= 2 && i - 2 < traj->records.size()) rec = &traj->records[i - 2];
    if (rec) {
      os << format_double(rec->final_deviation) << '\t' << rec->descent_iterations;
    } else {
      os << '\t';
    }
    os << '\n';
  }
}

std::vector<TimedPoint> read_track_table(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw Error("trajectory table: missing header line");
  const std::vector<std::string_view> header = split_tabs(line);
  std::size_t col_t = header.size(), col_x = header.size(), col_y = header.size();
  for (std::size_t c = 0; c < header.size(); ++c) {
    const std::string_view name = trim(header[c]);
    if (name == "t_cm") col_t = c;
    else if (name == "x_cm") col_x = c;
    else if (name == "y_cm") col_y = c;
  }
  if (col_t == header.size() || col_x == header.size() || col_y == header.size())
    throw Error("trajectory table: header must contain t_cm, x_cm, y_cm");

  std::vector<TimedPoint> out;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const std::vector<std::string_view> cells = split_tabs(line);
    const std::size_t need = std::max({col_t, col_x, col_y});
    if (cells.size() <= need)
      throw Error("trajectory table line " + std::to_string(lineno) + ": too few columns");
    const auto t = try_parse_double(cells[col_t]);
    const auto x = try_parse_double(cells[col_x]);
    const auto y = try_parse_double(cells[col_y]);
    if (!t || !x || !y)
      throw Error("trajectory table line " + std::to_string(lineno) + ": bad numeric value");
    out.push_back({*t, *x, *y});
  }
  if (out.size() < 2) throw Error("trajectory table: need at least two data rows");
  return out;
}

std::string apsides_report(std::span<const ApsisEvent> apsides,
                           std::span<const ShiftMeasurement> shifts, std::optional<double> m_cm) {
  std::ostringstream os;
  if (apsides.empty()) {
    os << "No apsides detected.\n";
    return os.str();
  }

  std::optional<double> last_perihelion_cm;
  for (std::size_t i = 0; i < apsides.size(); ++i) {
    const ApsisEvent& e = apsides[i];
    if (i > 0) os << kSeparator << '\n';
    os << (e.kind == ApsisKind::kPerihelion ? "Perihelion" : "Aphelion") << '\n';
    os << "t = " << format_double(e.sample.t_cm) << " cm x = " << format_double(e.sample.x_cm)
       << " cm y = " << format_double(e.sample.y_cm) << " cm\n";
    if (e.sample.angle_deg)
      os << "angle = " << format_double(*e.sample.angle_deg) << " deg\n";
    else
      os << "angle undefined (at origin)\n";
    os << "distance = " << format_double(e.sample.r_cm) << " cm\n";
    os << "velocity = " << format_double(e.sample.speed_c) << " c\n";

    if (e.kind == ApsisKind::kPerihelion) {
      last_perihelion_cm = e.sample.r_cm;
      continue;
    }
    if (m_cm && last_perihelion_cm) {
      os << "theoretical shift = "
         << format_double(theoretical_shift_deg(*m_cm, e.sample.r_cm, *last_perihelion_cm))
         << " deg\n";
    }
    for (const ShiftMeasurement& s : shifts) {
      if (s.kind == ApsisKind::kAphelion && s.to_index == e.index) {
        os << "observed shift = " << format_double(s.shift_deg) << " deg\n";
        break;
      }
    }
  }
  return os.str();
}

std::string apsides_json(std::span<const ApsisEvent> apsides,
                         std::span<const ShiftMeasurement> shifts, std::optional<double> m_cm) {
  nlohmann::ordered_json doc;
  doc["apsides"] = nlohmann::ordered_json::array();
  for (const ApsisEvent& e : apsides) {
    nlohmann::ordered_json rec;
    rec["kind"] = kind_name(e.kind);
    rec["index"] = e.index;
    rec["t_cm"] = e.sample.t_cm;
    rec["x_cm"] = e.sample.x_cm;
    rec["y_cm"] = e.sample.y_cm;
    rec["r_cm"] = e.sample.r_cm;
    if (e.sample.angle_deg)
      rec["angle_deg"] = *e.sample.angle_deg;
    else
      rec["angle_deg"] = nullptr;
    rec["speed_c"] = e.sample.speed_c;
    doc["apsides"].push_back(std::move(rec));
  }
  doc["shifts"] = nlohmann::ordered_json::array();
  for (const ShiftMeasurement& s : shifts) {
    nlohmann::ordered_json rec;
    rec["kind"] = kind_name(s.kind);
    rec["from_index"] = s.from_index;
    rec["to_index"] = s.to_index;
    rec["shift_deg"] = s.shift_deg;
    doc["shifts"].push_back(std::move(rec));
  }
  doc["theoretical_shifts"] = nlohmann::ordered_json::array();
  if (m_cm) {
    std::optional<double> last_perihelion_cm;
    for (const ApsisEvent& e : apsides) {
      if (e.kind == ApsisKind::kPerihelion) {
        last_perihelion_cm = e.sample.r_cm;
        continue;
      }
      if (!last_perihelion_cm) continue;
      nlohmann::ordered_json rec;
      rec["aphelion_index"] = e.index;
      rec["aphelion_cm"] = e.sample.r_cm;
      rec["perihelion_cm"] = *last_perihelion_cm;
      rec["shift_deg"] = theoretical_shift_deg(*m_cm, e.sample.r_cm, *last_perihelion_cm);
      doc["theoretical_shifts"].push_back(std::move(rec));
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace dgeo
