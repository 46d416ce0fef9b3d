#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dgeo/deviation.hpp"
#include "dgeo/fields.hpp"
#include "dgeo/types.hpp"

namespace dgeo {

// First guess for the next point before descent.
enum class Predictor { kConstantAcceleration, kConstantVelocity };

// Which axes the deviation probes move the middle point along.
enum class AxisMode { kAll, kSpatial };

struct SolverConfig {
  double delta = 1.0;                         // cell edge, cm
  std::int64_t a = 1;                         // timeline multiplier, tau = a*delta
  std::int64_t max_descent_iters = 1'000'000; // moves before DescentBudgetExceeded
  AxisMode axes = AxisMode::kAll;
  bool velocity_bound_check = true;
  Predictor predictor = Predictor::kConstantAcceleration;
};

// Bookkeeping for one produced trajectory point.
struct StepRecord {
  std::size_t index = 0;                        // trajectory index of the point
  std::vector<std::int64_t> velocity;           // S_i = A_i - A_{i-1}, spatial cells
  std::vector<std::int64_t> acceleration;       // R_i = S_i - S_{i-1}
  std::int64_t descent_iterations = 0;          // moves taken from the first guess
  double final_deviation = 0.0;
  std::int64_t excluded_candidates = 0;         // spacelike cells skipped in descent
};

// A step whose Euclidean spatial displacement exceeds a cells (conjectured
// light-cone bound); recorded, never fatal.
struct VelocityBoundViolation {
  std::size_t index;           // index of the later point of the step
  double displacement_cells;
};

struct Trajectory {
  std::vector<LatticePoint> points;  // point i sits at time i*a cells
  double delta = 1.0;
  std::int64_t a = 1;
  MetricId metric;
  std::vector<StepRecord> records;   // one per point from index 2 on
  std::vector<VelocityBoundViolation> violations;
};

// A stored point that fails the local-minimum certificate.
struct MinimalityViolation {
  std::size_t index;          // interior point whose successor is not minimal
  LatticePoint neighbor;      // better neighbor found
  double w_neighbor;
  double w_chosen;
};

std::vector<int> axes_for(AxisMode mode, int spatial_dim);

// Iterated steepest-descent over the 3^n spatial-neighbor cube (center
// included) starting from the guess C; E, F are the two preceding trajectory
// points. Returns the settled point on C's time slot. Neighbors whose
// deviation is undefined because a probe is spacelike count as +infinity.
// The optional trace records the deviation after the start and each move.
std::pair<LatticePoint, StepRecord> local_minimize(const MetricField& field, const LatticePoint& E,
                                                   const LatticePoint& F, const LatticePoint& C,
                                                   const SolverConfig& cfg,
                                                   std::vector<double>* descent_trace = nullptr);

// Builds the predictor guess from the trailing history (>= 2 points; the
// acceleration predictor needs 3 and degrades to constant velocity below
// that), then delegates to local_minimize.
std::pair<LatticePoint, StepRecord> next_point(const MetricField& field,
                                               std::span<const LatticePoint> history,
                                               const SolverConfig& cfg);

// Full trajectory of steps+2 points from the two seeds.
Trajectory run_geodesic(const MetricField& field, const LatticePoint& e0, const LatticePoint& e1,
                        std::int64_t steps, const SolverConfig& cfg);

// Seeds from physical initial conditions; rounding is half-away-from-zero.
std::pair<LatticePoint, LatticePoint> initial_points(double x0_cm, double y0_cm, double vx_c,
                                                     double vy_c, double delta, std::int64_t a);

// Exact (2a+1)^n as a decimal string.
std::string count_velocity_states(std::int64_t a, int n);

// Re-checks the defining local-minimum condition at every interior point of a
// stored trajectory; tolerance absorbs tie re-evaluation round-off.
std::vector<MinimalityViolation> audit_local_minimality(const MetricField& field,
                                                        const Trajectory& traj,
                                                        const SolverConfig& cfg,
                                                        double tolerance = 1e-12);

// Euclidean |spatial displacement| <= a cells for every consecutive pair.
std::vector<VelocityBoundViolation> check_velocity_bound(const Trajectory& traj);

}  // namespace dgeo
