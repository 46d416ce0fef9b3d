#include "dgeo/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "dgeo/errors.hpp"
#include "dgeo/io.hpp"

namespace dgeo {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double want_double(std::string_view value, int line, const std::string& key) {
  const auto v = try_parse_double(value);
  if (!v || !std::isfinite(*v))
    throw ConfigError(line, key + ": expected a finite number, got '" + std::string(value) + "'");
  return *v;
}

std::int64_t want_int(std::string_view value, int line, const std::string& key) {
  const auto v = try_parse_int64(value);
  if (!v) throw ConfigError(line, key + ": expected an integer, got '" + std::string(value) + "'");
  return *v;
}

bool want_bool(std::string_view value, int line, const std::string& key) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError(line, key + ": expected true or false, got '" + std::string(value) + "'");
}

}  // namespace

SolverConfig RunConfig::solver() const {
  SolverConfig s;
  s.delta = delta_cm;
  s.a = a;
  s.max_descent_iters = max_descent_iters;
  s.axes = axes;
  s.velocity_bound_check = velocity_bound_check;
  s.predictor = predictor;
  return s;
}

void validate_config(const RunConfig& cfg) {
  const auto fail = [](const std::string& msg) { throw ConfigError(0, msg); };
  if (cfg.metric.name != "schwarzschild" && cfg.metric.name != "minkowski")
    fail("metric must be 'schwarzschild' or 'minkowski', got '" + cfg.metric.name + "'");
  if (cfg.metric.name == "schwarzschild" && !(cfg.metric.m_cm > 0.0))
    fail("m_cm must be > 0 for the schwarzschild metric");
  if (!(cfg.delta_cm > 0.0) || !std::isfinite(cfg.delta_cm)) fail("delta_cm must be > 0");
  if (cfg.a < 1) fail("a must be >= 1");
  if (cfg.steps < 0) fail("steps must be >= 0");
  if (!(std::hypot(cfg.vx_c, cfg.vy_c) < 1.0)) fail("speed >= c: |(vx_c, vy_c)| must be below 1");
  if (cfg.max_descent_iters < 1) fail("max_descent_iters must be >= 1");
  if (!(cfg.ode_ds_cm > 0.0)) fail("ode_ds_cm must be > 0");
  if (!(cfg.norm_drift_tol > 0.0)) fail("norm_drift_tol must be > 0");
  if (cfg.partials_h_cm < 0.0) fail("partials_h_cm must be >= 0 (0 = automatic)");
  if (cfg.trajectory_out.empty() || cfg.apsides_out.empty() || cfg.apsides_json_out.empty() ||
      cfg.compare_out.empty())
    fail("output paths must not be empty");
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  bool have_m_cm = false;

  using Handler = std::function<void(std::string_view, int)>;
  const std::map<std::string, Handler, std::less<>> handlers = {
      {"metric",
       [&](std::string_view v, int ln) {
         cfg.metric.name = std::string(v);
         if (cfg.metric.name != "schwarzschild" && cfg.metric.name != "minkowski")
           throw ConfigError(ln, "metric must be 'schwarzschild' or 'minkowski', got '" +
                                     cfg.metric.name + "'");
       }},
      {"m_cm",
       [&](std::string_view v, int ln) {
         cfg.metric.m_cm = want_double(v, ln, "m_cm");
         have_m_cm = true;
         if (!(cfg.metric.m_cm > 0.0)) throw ConfigError(ln, "m_cm must be > 0");
       }},
      {"delta_cm",
       [&](std::string_view v, int ln) {
         cfg.delta_cm = want_double(v, ln, "delta_cm");
         if (!(cfg.delta_cm > 0.0)) throw ConfigError(ln, "delta_cm must be > 0");
       }},
      {"a",
       [&](std::string_view v, int ln) {
         cfg.a = want_int(v, ln, "a");
         if (cfg.a < 1) throw ConfigError(ln, "a must be >= 1");
       }},
      {"x0_cm", [&](std::string_view v, int ln) { cfg.x0_cm = want_double(v, ln, "x0_cm"); }},
      {"y0_cm", [&](std::string_view v, int ln) { cfg.y0_cm = want_double(v, ln, "y0_cm"); }},
      {"vx_c", [&](std::string_view v, int ln) { cfg.vx_c = want_double(v, ln, "vx_c"); }},
      {"vy_c", [&](std::string_view v, int ln) { cfg.vy_c = want_double(v, ln, "vy_c"); }},
      {"steps",
       [&](std::string_view v, int ln) {
         cfg.steps = want_int(v, ln, "steps");
         if (cfg.steps < 0) throw ConfigError(ln, "steps must be >= 0");
       }},
      {"axes",
       [&](std::string_view v, int ln) {
         if (v == "all") cfg.axes = AxisMode::kAll;
         else if (v == "spatial") cfg.axes = AxisMode::kSpatial;
         else throw ConfigError(ln, "axes must be 'all' or 'spatial', got '" + std::string(v) + "'");
       }},
      {"predictor",
       [&](std::string_view v, int ln) {
         if (v == "constant-acceleration") cfg.predictor = Predictor::kConstantAcceleration;
         else if (v == "constant-velocity") cfg.predictor = Predictor::kConstantVelocity;
         else
           throw ConfigError(ln, "predictor must be 'constant-acceleration' or "
                                 "'constant-velocity', got '" + std::string(v) + "'");
       }},
      {"max_descent_iters",
       [&](std::string_view v, int ln) {
         cfg.max_descent_iters = want_int(v, ln, "max_descent_iters");
         if (cfg.max_descent_iters < 1) throw ConfigError(ln, "max_descent_iters must be >= 1");
       }},
      {"velocity_bound_check",
       [&](std::string_view v, int ln) {
         cfg.velocity_bound_check = want_bool(v, ln, "velocity_bound_check");
       }},
      {"ode_ds_cm",
       [&](std::string_view v, int ln) {
         cfg.ode_ds_cm = want_double(v, ln, "ode_ds_cm");
         if (!(cfg.ode_ds_cm > 0.0)) throw ConfigError(ln, "ode_ds_cm must be > 0");
       }},
      {"norm_drift_tol",
       [&](std::string_view v, int ln) {
         cfg.norm_drift_tol = want_double(v, ln, "norm_drift_tol");
         if (!(cfg.norm_drift_tol > 0.0)) throw ConfigError(ln, "norm_drift_tol must be > 0");
       }},
      {"partials_h_cm",
       [&](std::string_view v, int ln) {
         cfg.partials_h_cm = want_double(v, ln, "partials_h_cm");
         if (cfg.partials_h_cm < 0.0)
           throw ConfigError(ln, "partials_h_cm must be >= 0 (0 = automatic)");
       }},
      {"trajectory_out",
       [&](std::string_view v, int) { cfg.trajectory_out = std::string(v); }},
      {"apsides_out", [&](std::string_view v, int) { cfg.apsides_out = std::string(v); }},
      {"apsides_json_out",
       [&](std::string_view v, int) { cfg.apsides_json_out = std::string(v); }},
      {"compare_out", [&](std::string_view v, int) { cfg.compare_out = std::string(v); }},
      {"trajectory_in", [&](std::string_view v, int) { cfg.trajectory_in = std::string(v); }},
  };

  std::set<std::string, std::less<>> seen;
  int speed_line = 0;

  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos
                                                                           : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;

    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(lineno, "expected key=value, got '" + std::string(line) + "'");
    const std::string key{trim(line.substr(0, eq))};
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(lineno, "empty key");

    const auto it = handlers.find(key);
    if (it == handlers.end()) throw ConfigError(lineno, "unknown key '" + key + "'");
    if (!seen.insert(key).second) throw ConfigError(lineno, "duplicate key '" + key + "'");
    it->second(value, lineno);
    if (key == "vx_c" || key == "vy_c") speed_line = lineno;
  }

  static constexpr const char* kRequired[] = {"metric", "delta_cm", "a",    "x0_cm",
                                              "y0_cm",  "vx_c",     "vy_c", "steps"};
  std::string missing;
  for (const char* k : kRequired) {
    if (!seen.contains(k)) missing += missing.empty() ? k : std::string(", ") + k;
  }
  if (cfg.metric.name == "schwarzschild" && !have_m_cm)
    missing += missing.empty() ? "m_cm" : std::string(", ") + "m_cm";
  if (!missing.empty()) throw ConfigError(lineno, "missing required key(s): " + missing);

  if (cfg.metric.name == "minkowski" && have_m_cm)
    throw ConfigError(lineno, "m_cm is only meaningful with metric=schwarzschild");
  if (!(std::hypot(cfg.vx_c, cfg.vy_c) < 1.0))
    throw ConfigError(speed_line, "speed >= c: |(vx_c, vy_c)| must be below 1");

  validate_config(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(0, "cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace dgeo
