#include "dgeo/solver.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dgeo/errors.hpp"

namespace dgeo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// All {-1,0,1}^n spatial offsets except zero, in lexicographic order, so that
// scanning candidates in this order realizes the documented tie-break.
std::vector<std::vector<int>> neighbor_offsets(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n), -1);
  for (;;) {
    if (std::any_of(cur.begin(), cur.end(), [](int v) { return v != 0; })) out.push_back(cur);
    int k = n - 1;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == 1) {
      cur[static_cast<std::size_t>(k)] = -1;
      --k;
    }
    if (k < 0) break;
    ++cur[static_cast<std::size_t>(k)];
  }
  return out;
}

LatticePoint offset_by(const LatticePoint& p, const std::vector<int>& off) {
  LatticePoint q = p;
  for (std::size_t j = 0; j < off.size(); ++j) q.coords[j + 1] += off[j];
  return q;
}

// Deviation with spacelike probe failures mapped to +infinity (the light cone
// confines the search); singular metric evaluations stay fatal.
double guarded_deviation(const MetricField& field, const SolverConfig& cfg,
                         std::span<const int> axes, const LatticePoint& E, const LatticePoint& F,
                         const LatticePoint& G, std::int64_t* excluded) {
  try {
    return deviation_discrete(field, cfg.delta, E, F, G, axes);
  } catch (const SpacelikeStep&) {
    if (excluded) ++*excluded;
    return kInf;
  }
}

void check_slots(const LatticePoint& E, const LatticePoint& F, const LatticePoint& C,
                 std::int64_t a) {
  if (F.time() != E.time() + a || C.time() != F.time() + a)
    throw std::invalid_argument("E, F, C must sit on three consecutive timeline slots");
}

std::int64_t round_to_cells(double value, const char* what) {
  if (!std::isfinite(value) || std::abs(value) >= 9.2e18)
    throw RangeOverflow(std::string(what) + " = " + std::to_string(value) + " cells");
  return std::llround(value);
}

}  // namespace

std::vector<int> axes_for(AxisMode mode, int spatial_dim) {
  return mode == AxisMode::kAll ? all_axes(spatial_dim) : spatial_axes(spatial_dim);
}

std::pair<LatticePoint, StepRecord> local_minimize(const MetricField& field, const LatticePoint& E,
                                                   const LatticePoint& F, const LatticePoint& C,
                                                   const SolverConfig& cfg,
                                                   std::vector<double>* descent_trace) {
  const int n = field.spatial_dim();
  if (E.dim() != static_cast<std::size_t>(n) + 1 || F.dim() != E.dim() || C.dim() != E.dim())
    throw std::invalid_argument("point dimension does not match the field");
  if (cfg.a < 1 || cfg.max_descent_iters < 1)
    throw std::invalid_argument("solver config requires a >= 1 and max_descent_iters >= 1");
  check_slots(E, F, C, cfg.a);

  const std::vector<int> axes = axes_for(cfg.axes, n);
  const std::vector<std::vector<int>> offsets = neighbor_offsets(n);

  StepRecord rec;
  LatticePoint current = C;
  double w_current = guarded_deviation(field, cfg, axes, E, F, current, &rec.excluded_candidates);
  if (descent_trace) descent_trace->push_back(w_current);

  std::int64_t moves = 0;
  for (;;) {
    LatticePoint best;
    double w_best = kInf;
    bool have_best = false;
    for (const auto& off : offsets) {
      LatticePoint cand = offset_by(current, off);
      const double w = guarded_deviation(field, cfg, axes, E, F, cand, &rec.excluded_candidates);
      if (w < w_best) {  // strict: first hit keeps the lexicographically smallest
        w_best = w;
        best = std::move(cand);
        have_best = true;
      }
    }
    if (!have_best || !(w_best < w_current)) break;  // ties keep the current point
    if (moves >= cfg.max_descent_iters)
      throw DescentBudgetExceeded(cfg.max_descent_iters);
    current = std::move(best);
    w_current = w_best;
    ++moves;
    if (descent_trace) descent_trace->push_back(w_current);
  }

  if (!std::isfinite(w_current))
    throw Error("descent trapped: deviation undefined at the guess and every neighbor");

  rec.descent_iterations = moves;
  rec.final_deviation = w_current;
  return {std::move(current), std::move(rec)};
}

std::pair<LatticePoint, StepRecord> next_point(const MetricField& field,
                                               std::span<const LatticePoint> history,
                                               const SolverConfig& cfg) {
  if (history.size() < 2) throw std::invalid_argument("need at least two prior points");
  const int n = field.spatial_dim();
  const LatticePoint& E = history[history.size() - 2];
  const LatticePoint& F = history[history.size() - 1];

  std::vector<std::int64_t> S(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    S[static_cast<std::size_t>(k)] =
        F.coords[static_cast<std::size_t>(k) + 1] - E.coords[static_cast<std::size_t>(k) + 1];

  LatticePoint guess = F;
  guess.coords[0] += cfg.a;
  for (int k = 0; k < n; ++k) guess.coords[static_cast<std::size_t>(k) + 1] += S[static_cast<std::size_t>(k)];

  // Acceleration term needs a third history point; below that the guess
  // degrades to constant velocity.
  if (cfg.predictor == Predictor::kConstantAcceleration && history.size() >= 3) {
    const LatticePoint& D = history[history.size() - 3];
    for (int k = 0; k < n; ++k) {
      const std::int64_t s_prev =
          E.coords[static_cast<std::size_t>(k) + 1] - D.coords[static_cast<std::size_t>(k) + 1];
      guess.coords[static_cast<std::size_t>(k) + 1] += S[static_cast<std::size_t>(k)] - s_prev;
    }
  }

  auto [G, rec] = local_minimize(field, E, F, guess, cfg);
  rec.velocity.resize(static_cast<std::size_t>(n));
  rec.acceleration.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const std::size_t j = static_cast<std::size_t>(k);
    rec.velocity[j] = G.coords[j + 1] - F.coords[j + 1];
    rec.acceleration[j] = rec.velocity[j] - S[j];
  }
  return {std::move(G), std::move(rec)};
}

Trajectory run_geodesic(const MetricField& field, const LatticePoint& e0, const LatticePoint& e1,
                        std::int64_t steps, const SolverConfig& cfg) {
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  if (e0.time() != 0 || e1.time() != cfg.a)
    throw std::invalid_argument("seeds must sit at times 0 and a");

  Trajectory traj;
  traj.points = {e0, e1};
  traj.points.reserve(static_cast<std::size_t>(steps) + 2);
  traj.delta = cfg.delta;
  traj.a = cfg.a;

  for (std::int64_t i = 0; i < steps; ++i) {
    const std::size_t produced = traj.points.size();
    try {
      auto [g, rec] = next_point(field, traj.points, cfg);
      rec.index = produced;
      traj.points.push_back(std::move(g));
      traj.records.push_back(std::move(rec));
    } catch (const DescentBudgetExceeded& e) {
      throw DescentBudgetExceeded(e.budget, "advancing to point " + std::to_string(produced));
    } catch (const MetricSingularity& e) {
      throw MetricSingularity(e.r_cm, e.m_cm, "advancing to point " + std::to_string(produced));
    }
  }

  if (cfg.velocity_bound_check) traj.violations = check_velocity_bound(traj);
  return traj;
}

std::pair<LatticePoint, LatticePoint> initial_points(double x0_cm, double y0_cm, double vx_c,
                                                     double vy_c, double delta, std::int64_t a) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be > 0");
  if (a < 1) throw std::invalid_argument("timeline multiplier a must be >= 1");
  if (!(std::hypot(vx_c, vy_c) < 1.0))
    throw std::invalid_argument("initial speed must be below c");

  const std::int64_t cx = round_to_cells(x0_cm / delta, "x0");
  const std::int64_t cy = round_to_cells(y0_cm / delta, "y0");
  const std::int64_t sx = round_to_cells(vx_c * static_cast<double>(a), "vx*a");
  const std::int64_t sy = round_to_cells(vy_c * static_cast<double>(a), "vy*a");

  LatticePoint e0{{0, cx, cy}};
  LatticePoint e1{{a, cx + sx, cy + sy}};
  return {std::move(e0), std::move(e1)};
}

std::string count_velocity_states(std::int64_t a, int n) {
  if (a < 0 || n < 1) throw std::invalid_argument("need a >= 0 and n >= 1");
  const boost::multiprecision::cpp_int base = 2 * boost::multiprecision::cpp_int(a) + 1;
  const boost::multiprecision::cpp_int count = boost::multiprecision::pow(base, static_cast<unsigned>(n));
  return count.str();
}

std::vector<MinimalityViolation> audit_local_minimality(const MetricField& field,
                                                        const Trajectory& traj,
                                                        const SolverConfig& cfg,
                                                        double tolerance) {
  std::vector<MinimalityViolation> out;
  if (traj.points.size() < 3) return out;
  const int n = field.spatial_dim();
  const std::vector<int> axes = axes_for(cfg.axes, n);
  const std::vector<std::vector<int>> offsets = neighbor_offsets(n);

  for (std::size_t i = 1; i + 1 < traj.points.size(); ++i) {
    const LatticePoint& E = traj.points[i - 1];
    const LatticePoint& F = traj.points[i];
    const LatticePoint& chosen = traj.points[i + 1];
    const double w_chosen = guarded_deviation(field, cfg, axes, E, F, chosen, nullptr);
    for (const auto& off : offsets) {
      LatticePoint cand = offset_by(chosen, off);
      const double w = guarded_deviation(field, cfg, axes, E, F, cand, nullptr);
      if (w < w_chosen - tolerance)
        out.push_back({i, std::move(cand), w, w_chosen});
    }
  }
  return out;
}

std::vector<VelocityBoundViolation> check_velocity_bound(const Trajectory& traj) {
  std::vector<VelocityBoundViolation> out;
  for (std::size_t i = 1; i < traj.points.size(); ++i) {
    const LatticePoint& p = traj.points[i - 1];
    const LatticePoint& q = traj.points[i];
    unsigned __int128 sum = 0;
    for (std::size_t k = 1; k < q.dim(); ++k) {
      const std::int64_t d = q.coords[k] - p.coords[k];
      sum += static_cast<unsigned __int128>(static_cast<__int128>(d) * d);
    }
    const unsigned __int128 bound =
        static_cast<unsigned __int128>(static_cast<__int128>(traj.a) * traj.a);
    if (sum > bound)
      out.push_back({i, std::sqrt(static_cast<double>(sum))});
  }
  return out;
}

}  // namespace dgeo
