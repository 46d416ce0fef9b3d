#include "dgeo/orbit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dgeo/errors.hpp"

namespace dgeo {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

double wrap_degrees(double d) {
  d = std::fmod(d, 360.0);
  if (d <= -180.0) d += 360.0;
  if (d > 180.0) d -= 360.0;
  return d;
}

}  // namespace

std::vector<OrbitSample> orbit_series(std::span<const TimedPoint> track) {
  if (track.size() < 2) throw std::invalid_argument("orbit series needs at least two points");
  std::vector<OrbitSample> out(track.size());
  for (std::size_t i = 0; i < track.size(); ++i) {
    OrbitSample& s = out[i];
    s.t_cm = track[i].t_cm;
    s.x_cm = track[i].x_cm;
    s.y_cm = track[i].y_cm;
    s.r_cm = std::hypot(s.x_cm, s.y_cm);
    if (s.x_cm != 0.0 || s.y_cm != 0.0) {
      double angle = std::atan2(s.y_cm, s.x_cm) * kDegPerRad;
      if (angle <= -180.0) angle += 360.0;  // keep the range (-180, 180]
      s.angle_deg = angle;
    }
    // speed toward the next sample; the last sample reuses the preceding leg
    const std::size_t j = i + 1 < track.size() ? i : i - 1;
    const double dt = track[j + 1].t_cm - track[j].t_cm;
    if (!(dt > 0.0)) throw std::invalid_argument("orbit series times must be increasing");
    s.speed_c = std::hypot(track[j + 1].x_cm - track[j].x_cm, track[j + 1].y_cm - track[j].y_cm) / dt;
  }
  return out;
}

std::vector<OrbitSample> orbit_series(const Trajectory& traj) {
  if (traj.points.size() < 2) throw std::invalid_argument("orbit series needs at least two points");
  std::vector<TimedPoint> track(traj.points.size());
  for (std::size_t i = 0; i < traj.points.size(); ++i) {
    const LatticePoint& p = traj.points[i];
    if (p.dim() != 3) throw std::invalid_argument("orbit analysis expects 2+1 dimensions");
    track[i] = {static_cast<double>(p.coords[0]) * traj.delta,
                static_cast<double>(p.coords[1]) * traj.delta,
                static_cast<double>(p.coords[2]) * traj.delta};
  }
  return orbit_series(track);
}

std::vector<ApsisEvent> detect_apsides(std::span<const OrbitSample> series) {
  if (series.size() < 3) throw std::invalid_argument("apsis detection needs at least three samples");
  std::vector<ApsisEvent> out;
  for (std::size_t i = 1; i + 1 < series.size(); ++i) {
    const double prev = series[i - 1].r_cm;
    const double cur = series[i].r_cm;
    const double next = series[i + 1].r_cm;
    if (prev > cur && cur < next)
      out.push_back({ApsisKind::kPerihelion, i, series[i]});
    else if (prev < cur && cur > next)
      out.push_back({ApsisKind::kAphelion, i, series[i]});
  }
  return out;
}

double theoretical_shift_deg(double m_cm, double aphelion_cm, double perihelion_cm) {
  if (!(aphelion_cm > 0.0) || !(perihelion_cm > 0.0))
    throw std::invalid_argument("apsis distances must be > 0");
  const double sigma_rad = 1.5 * std::numbers::pi * m_cm * (1.0 / aphelion_cm + 1.0 / perihelion_cm);
  return sigma_rad * kDegPerRad;
}

std::vector<ShiftMeasurement> observed_shift(std::span<const ApsisEvent> apsides) {
  std::vector<ShiftMeasurement> out;
  const ApsisEvent* last_of_kind[2] = {nullptr, nullptr};
  for (const ApsisEvent& e : apsides) {
    const std::size_t k = e.kind == ApsisKind::kPerihelion ? 0 : 1;
    const ApsisEvent* prev = last_of_kind[k];
    if (prev && prev->sample.angle_deg && e.sample.angle_deg) {
      out.push_back({e.kind, wrap_degrees(*e.sample.angle_deg - *prev->sample.angle_deg),
                     prev->index, e.index});
    }
    last_of_kind[k] = &e;
  }
  if (out.empty()) throw InsufficientApsides();
  return out;
}

}  // namespace dgeo
