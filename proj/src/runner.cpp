#include "dgeo/runner.hpp"

#include <utility>

#include "dgeo/continuum.hpp"
#include "dgeo/errors.hpp"
#include "dgeo/fields.hpp"

namespace dgeo {

void analyze_series(EngineOutput& out) {
  if (out.series.size() >= 3) out.apsides = detect_apsides(out.series);
  try {
    out.shifts = observed_shift(out.apsides);
  } catch (const InsufficientApsides&) {
    out.shifts.clear();
  }
}

EngineOutput run_lattice(const RunConfig& cfg, Trajectory* traj_out) {
  const auto field = make_metric_field(cfg.metric);
  const auto [e0, e1] = initial_points(cfg.x0_cm, cfg.y0_cm, cfg.vx_c, cfg.vy_c, cfg.delta_cm, cfg.a);
  Trajectory traj = run_geodesic(*field, e0, e1, cfg.steps, cfg.solver());
  EngineOutput out;
  out.series = orbit_series(traj);
  analyze_series(out);
  if (traj_out) *traj_out = std::move(traj);
  return out;
}

EngineOutput run_reference(const RunConfig& cfg) {
  const auto field = make_metric_field(cfg.metric);
  ContinuousPoint x0{Displacement(3)};
  x0.coords << 0.0, cfg.x0_cm, cfg.y0_cm;
  Displacement dir(3);
  dir << 1.0, cfg.vx_c, cfg.vy_c;
  const PhaseState state0 = normalized_state(*field, x0, dir);

  const double tau = static_cast<double>(cfg.a) * cfg.delta_cm;
  const double t_end = static_cast<double>(cfg.steps + 1) * tau;
  // Coordinate time grows at least as fast as proper time (dt/ds >= 1 when
  // g_tt <= 1), so this span covers t_end; the slack absorbs round-off.
  const double total_s = t_end + cfg.ode_ds_cm + 1e-6 * t_end + 1.0;

  OdeOptions opts;
  opts.ds = cfg.ode_ds_cm;
  opts.h = cfg.partials_h_cm;  // 0 selects the field's scale-aware step
  opts.norm_drift_tol = cfg.norm_drift_tol;
  const std::vector<OdeSample> samples = integrate_geodesic_ode(*field, state0, total_s, opts);

  std::vector<double> times(static_cast<std::size_t>(cfg.steps) + 2);
  for (std::size_t k = 0; k < times.size(); ++k) times[k] = static_cast<double>(k) * tau;
  const std::vector<ContinuousPoint> positions = sample_at_times(samples, times);

  std::vector<TimedPoint> track(positions.size());
  for (std::size_t k = 0; k < positions.size(); ++k)
    track[k] = {times[k], positions[k].coords(1), positions[k].coords(2)};

  EngineOutput out;
  out.series = orbit_series(track);
  analyze_series(out);
  return out;
}

}  // namespace dgeo
