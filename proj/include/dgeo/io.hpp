#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dgeo/orbit.hpp"
#include "dgeo/solver.hpp"

namespace dgeo {

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

// Strict full-string parses; nullopt on any trailing garbage.
std::optional<double> try_parse_double(std::string_view s);
std::optional<std::int64_t> try_parse_int64(std::string_view s);

// Tab-separated table, one row per sample, header line first. Columns:
// step, t_cm, x_cm, y_cm, r_cm, angle_deg, speed_c, deviation, descent_iters.
// The last two columns are filled from the trajectory records where they
// exist (points from index 2 on) and left empty otherwise; pass traj =
// nullptr for engine outputs that have no solver records at all.
void write_series_table(std::ostream& os, std::span<const OrbitSample> series,
                        const Trajectory* traj);

// Reads t_cm, x_cm, y_cm back from a table produced by write_series_table
// (or any tab-separated file with those header columns).
std::vector<TimedPoint> read_track_table(std::istream& is);

// Report in the experiment-log shape: one block per apsis (kind, t/x/y line,
// angle, distance, velocity) with dashed separators between blocks. Aphelion
// blocks list the theoretical shift (this aphelion with the latest perihelion)
// when m_cm is known, and the observed shift of consecutive aphelion pairs.
std::string apsides_report(std::span<const ApsisEvent> apsides,
                           std::span<const ShiftMeasurement> shifts, std::optional<double> m_cm);

// Machine-readable counterpart: every event with all sample fields, every
// shift measurement, and the theoretical shifts when m_cm is known.
std::string apsides_json(std::span<const ApsisEvent> apsides,
                         std::span<const ShiftMeasurement> shifts, std::optional<double> m_cm);

}  // namespace dgeo
