#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dgeo/config.hpp"
#include "dgeo/errors.hpp"
#include "dgeo/io.hpp"
#include "dgeo/runner.hpp"

namespace {

struct CliOptions {
  std::string config_path;
  std::optional<std::string> metric, axes, predictor;
  std::optional<std::string> trajectory_out, apsides_out, apsides_json_out, compare_out,
      trajectory_in;
  std::optional<double> m_cm, delta_cm, x0_cm, y0_cm, vx_c, vy_c, ode_ds_cm, norm_drift_tol,
      partials_h_cm;
  std::optional<std::int64_t> a, steps, max_descent_iters;
  std::optional<bool> velocity_bound_check;
};

void add_common_options(CLI::App* sub, CliOptions& o) {
  sub->add_option("config", o.config_path, "config file, key=value lines, '#' comments")
      ->required();
  sub->add_option("--metric", o.metric, "schwarzschild | minkowski");
  sub->add_option("--m-cm", o.m_cm, "Schwarzschild radius in cm");
  sub->add_option("--delta-cm", o.delta_cm, "lattice cell edge in cm");
  sub->add_option("--a", o.a, "timeline multiplier (tau = a*delta)");
  sub->add_option("--x0-cm", o.x0_cm, "initial x in cm");
  sub->add_option("--y0-cm", o.y0_cm, "initial y in cm");
  sub->add_option("--vx-c", o.vx_c, "initial x velocity as a fraction of c");
  sub->add_option("--vy-c", o.vy_c, "initial y velocity as a fraction of c");
  sub->add_option("--steps", o.steps, "number of solver steps past the two seeds");
  sub->add_option("--axes", o.axes, "deviation probe axes: all | spatial");
  sub->add_option("--predictor", o.predictor, "constant-acceleration | constant-velocity");
  sub->add_option("--max-descent-iters", o.max_descent_iters, "descent move budget per step");
  sub->add_option("--velocity-bound-check", o.velocity_bound_check,
                  "check the |dX| <= tau light-cone bound");
  sub->add_option("--ode-ds-cm", o.ode_ds_cm, "reference integrator proper-time step in cm");
  sub->add_option("--norm-drift-tol", o.norm_drift_tol, "reference norm drift tolerance");
  sub->add_option("--partials-h-cm", o.partials_h_cm,
                  "metric finite-difference step in cm (0 = scale-aware)");
  sub->add_option("--trajectory-out", o.trajectory_out, "trajectory table path");
  sub->add_option("--apsides-out", o.apsides_out, "apsides report path");
  sub->add_option("--apsides-json-out", o.apsides_json_out, "machine-readable apsides path");
  sub->add_option("--compare-out", o.compare_out, "comparison table path");
  sub->add_option("--trajectory-in", o.trajectory_in, "existing table for analyze");
}

dgeo::RunConfig effective_config(const CliOptions& o) {
  dgeo::RunConfig cfg = dgeo::load_config(o.config_path);
  if (o.metric) cfg.metric.name = *o.metric;
  if (o.m_cm) cfg.metric.m_cm = *o.m_cm;
  if (o.delta_cm) cfg.delta_cm = *o.delta_cm;
  if (o.a) cfg.a = *o.a;
  if (o.x0_cm) cfg.x0_cm = *o.x0_cm;
  if (o.y0_cm) cfg.y0_cm = *o.y0_cm;
  if (o.vx_c) cfg.vx_c = *o.vx_c;
  if (o.vy_c) cfg.vy_c = *o.vy_c;
  if (o.steps) cfg.steps = *o.steps;
  if (o.axes) {
    if (*o.axes == "all") cfg.axes = dgeo::AxisMode::kAll;
    else if (*o.axes == "spatial") cfg.axes = dgeo::AxisMode::kSpatial;
    else throw dgeo::ConfigError(0, "--axes must be 'all' or 'spatial'");
  }
  if (o.predictor) {
    if (*o.predictor == "constant-acceleration")
      cfg.predictor = dgeo::Predictor::kConstantAcceleration;
    else if (*o.predictor == "constant-velocity")
      cfg.predictor = dgeo::Predictor::kConstantVelocity;
    else
      throw dgeo::ConfigError(0,
                              "--predictor must be 'constant-acceleration' or 'constant-velocity'");
  }
  if (o.max_descent_iters) cfg.max_descent_iters = *o.max_descent_iters;
  if (o.velocity_bound_check) cfg.velocity_bound_check = *o.velocity_bound_check;
  if (o.ode_ds_cm) cfg.ode_ds_cm = *o.ode_ds_cm;
  if (o.norm_drift_tol) cfg.norm_drift_tol = *o.norm_drift_tol;
  if (o.partials_h_cm) cfg.partials_h_cm = *o.partials_h_cm;
  if (o.trajectory_out) cfg.trajectory_out = *o.trajectory_out;
  if (o.apsides_out) cfg.apsides_out = *o.apsides_out;
  if (o.apsides_json_out) cfg.apsides_json_out = *o.apsides_json_out;
  if (o.compare_out) cfg.compare_out = *o.compare_out;
  if (o.trajectory_in) cfg.trajectory_in = *o.trajectory_in;
  dgeo::validate_config(cfg);
  return cfg;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw dgeo::Error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw dgeo::Error("write to '" + path + "' failed");
}

std::optional<double> mass_of(const dgeo::RunConfig& cfg) {
  if (cfg.metric.name == "schwarzschild") return cfg.metric.m_cm;
  return std::nullopt;
}

void emit_outputs(const dgeo::RunConfig& cfg, const dgeo::EngineOutput& out,
                  const dgeo::Trajectory* traj) {
  std::ostringstream table;
  dgeo::write_series_table(table, out.series, traj);
  write_file(cfg.trajectory_out, table.str());

  const std::string report = dgeo::apsides_report(out.apsides, out.shifts, mass_of(cfg));
  write_file(cfg.apsides_out, report);
  write_file(cfg.apsides_json_out, dgeo::apsides_json(out.apsides, out.shifts, mass_of(cfg)));
  std::cout << report;
}

int cmd_run(const dgeo::RunConfig& cfg) {
  dgeo::Trajectory traj;
  const dgeo::EngineOutput out = dgeo::run_lattice(cfg, &traj);
  emit_outputs(cfg, out, &traj);
  if (!traj.violations.empty())
    std::cerr << "warning: " << traj.violations.size()
              << " step(s) exceed the |dX| <= tau velocity bound\n";
  return 0;
}

int cmd_reference(const dgeo::RunConfig& cfg) {
  const dgeo::EngineOutput out = dgeo::run_reference(cfg);
  emit_outputs(cfg, out, nullptr);
  return 0;
}

int cmd_compare(const dgeo::RunConfig& cfg) {
  const dgeo::EngineOutput lattice = dgeo::run_lattice(cfg, nullptr);
  const dgeo::EngineOutput reference = dgeo::run_reference(cfg);

  const std::size_t n = std::min(lattice.series.size(), reference.series.size());
  std::ostringstream table;
  table << "step\tt_cm\tlattice_x_cm\tlattice_y_cm\treference_x_cm\treference_y_cm\t"
           "diff_cm\tdiff_cells\n";
  double max_diff = 0.0;
  std::size_t max_step = 0;
  double sum_diff = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const dgeo::OrbitSample& L = lattice.series[i];
    const dgeo::OrbitSample& R = reference.series[i];
    const double diff = std::hypot(L.x_cm - R.x_cm, L.y_cm - R.y_cm);
    if (diff > max_diff) {
      max_diff = diff;
      max_step = i;
    }
    sum_diff += diff;
    table << i << '\t' << dgeo::format_double(L.t_cm) << '\t' << dgeo::format_double(L.x_cm)
          << '\t' << dgeo::format_double(L.y_cm) << '\t' << dgeo::format_double(R.x_cm) << '\t'
          << dgeo::format_double(R.y_cm) << '\t' << dgeo::format_double(diff) << '\t'
          << dgeo::format_double(diff / cfg.delta_cm) << '\n';
  }
  write_file(cfg.compare_out, table.str());

  std::ostringstream summary;
  summary << "compared " << n << " steps";
  if (lattice.series.size() != reference.series.size())
    summary << " (truncated: lattice " << lattice.series.size() << ", reference "
            << reference.series.size() << ")";
  summary << "\n";
  const double mean = n > 0 ? sum_diff / static_cast<double>(n) : 0.0;
  summary << "max |dpos| = " << dgeo::format_double(max_diff) << " cm ("
          << dgeo::format_double(max_diff / cfg.delta_cm) << " cells) at step " << max_step
          << "\n";
  summary << "mean |dpos| = " << dgeo::format_double(mean) << " cm ("
          << dgeo::format_double(mean / cfg.delta_cm) << " cells)\n";
  std::cout << summary.str();
  return 0;
}

int cmd_analyze(const dgeo::RunConfig& cfg) {
  const std::string input = cfg.trajectory_in.empty() ? cfg.trajectory_out : cfg.trajectory_in;
  std::ifstream in(input, std::ios::binary);
  if (!in) throw dgeo::Error("cannot open trajectory table '" + input + "'");
  const std::vector<dgeo::TimedPoint> track = dgeo::read_track_table(in);

  dgeo::EngineOutput out;
  out.series = dgeo::orbit_series(track);
  dgeo::analyze_series(out);

  const std::string report = dgeo::apsides_report(out.apsides, out.shifts, mass_of(cfg));
  write_file(cfg.apsides_out, report);
  write_file(cfg.apsides_json_out, dgeo::apsides_json(out.apsides, out.shifts, mass_of(cfg)));
  std::cout << report;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"straightest lattice geodesics with a continuum cross-check"};
  app.require_subcommand(1);

  CliOptions run_o, ref_o, cmp_o, ana_o;
  CLI::App* run_cmd = app.add_subcommand("run", "lattice gradient-descent trajectory");
  add_common_options(run_cmd, run_o);
  CLI::App* ref_cmd = app.add_subcommand("reference", "continuum geodesic ODE trajectory");
  add_common_options(ref_cmd, ref_o);
  CLI::App* cmp_cmd = app.add_subcommand("compare", "run both engines and diff positions");
  add_common_options(cmp_cmd, cmp_o);
  CLI::App* ana_cmd = app.add_subcommand("analyze", "re-run apsis analysis on a stored table");
  add_common_options(ana_cmd, ana_o);

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(run_cmd)) return cmd_run(effective_config(run_o));
    if (app.got_subcommand(ref_cmd)) return cmd_reference(effective_config(ref_o));
    if (app.got_subcommand(cmp_cmd)) return cmd_compare(effective_config(cmp_o));
    return cmd_analyze(effective_config(ana_o));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const dgeo::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const dgeo::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
