#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "dgeo/fields.hpp"
#include "dgeo/solver.hpp"

namespace dgeo {

// One simulation setup; key=value text, '#' comments, unknown keys rejected.
// Fully deterministic (no seeds anywhere).
struct RunConfig {
  MetricId metric;               // key: metric (+ m_cm for schwarzschild)
  double delta_cm = 1.0;         // key: delta_cm
  std::int64_t a = 1;            // key: a
  double x0_cm = 0.0;            // key: x0_cm
  double y0_cm = 0.0;            // key: y0_cm
  double vx_c = 0.0;             // key: vx_c
  double vy_c = 0.0;             // key: vy_c
  std::int64_t steps = 0;        // key: steps

  AxisMode axes = AxisMode::kAll;                          // key: axes = all | spatial
  Predictor predictor = Predictor::kConstantAcceleration;  // key: predictor =
                                                           // constant-acceleration | constant-velocity
  std::int64_t max_descent_iters = 1'000'000;              // key: max_descent_iters
  bool velocity_bound_check = true;                        // key: velocity_bound_check

  double ode_ds_cm = 5.0e5;      // key: ode_ds_cm (reference integrator step)
  double norm_drift_tol = 1e-6;  // key: norm_drift_tol
  double partials_h_cm = 0.0;    // key: partials_h_cm; 0 = scale-aware default

  std::string trajectory_out = "trajectory.tsv";   // key: trajectory_out
  std::string apsides_out = "apsides.txt";         // key: apsides_out
  std::string apsides_json_out = "apsides.json";   // key: apsides_json_out
  std::string compare_out = "compare.tsv";         // key: compare_out
  std::string trajectory_in;                       // key: trajectory_in (analyze)

  SolverConfig solver() const;
};

// Validates a fully assembled config (value ranges, required combinations).
// Throws ConfigError with line 0 for post-override violations.
void validate_config(const RunConfig& cfg);

// Parses and validates; errors carry 1-based line numbers.
RunConfig parse_config(std::string_view text);

RunConfig load_config(const std::string& path);

}  // namespace dgeo
