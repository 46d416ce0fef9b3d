#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dgeo/solver.hpp"

namespace dgeo {

// Planar sample in physical units, shaped after the report fields.
struct OrbitSample {
  double t_cm = 0.0;
  double x_cm = 0.0;
  double y_cm = 0.0;
  double r_cm = 0.0;
  std::optional<double> angle_deg;  // two-argument arctangent, (-180, 180];
                                    // absent at the origin (x = y = 0)
  double speed_c = 0.0;             // Euclidean displacement / dt to next sample
};

enum class ApsisKind { kPerihelion, kAphelion };

struct ApsisEvent {
  ApsisKind kind;
  std::size_t index;  // sample index
  OrbitSample sample;
};

struct ShiftMeasurement {
  ApsisKind kind;
  double shift_deg;       // per revolution, unwrapped into (-180, 180]
  std::size_t from_index;
  std::size_t to_index;
};

// Minimal planar track; inputs for the series may come from any engine.
struct TimedPoint {
  double t_cm;
  double x_cm;
  double y_cm;
};

std::vector<OrbitSample> orbit_series(std::span<const TimedPoint> track);
std::vector<OrbitSample> orbit_series(const Trajectory& traj);

// Strict local extrema of r; plateaus produce no event.
std::vector<ApsisEvent> detect_apsides(std::span<const OrbitSample> series);

// sigma = (3/2) pi m (1/a + 1/p) radians per revolution, in degrees.
double theoretical_shift_deg(double m_cm, double aphelion_cm, double perihelion_cm);

// Angle difference between consecutive same-kind apsides, unwrapped into
// (-180, 180]. Throws InsufficientApsides when no same-kind pair exists.
std::vector<ShiftMeasurement> observed_shift(std::span<const ApsisEvent> apsides);

}  // namespace dgeo
