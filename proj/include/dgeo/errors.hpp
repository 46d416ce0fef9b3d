#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dgeo {

// Base class for every failure the library raises on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A candidate segment fell outside the light cone: PQ^T g(P) PQ < 0.
struct SpacelikeStep : Error {
  double quadratic_form;
  explicit SpacelikeStep(double q, const std::string& where = {});
};

// Metric requested where it is undefined (e.g. r <= m for Schwarzschild).
struct MetricSingularity : Error {
  double r_cm;
  double m_cm;
  MetricSingularity(double r, double m, const std::string& where = {});
};

// l(E,F,G) = 0, so a relative probe step cannot be formed.
struct ZeroLength : Error {
  ZeroLength();
};

// Gradient descent did not settle within the configured move budget.
struct DescentBudgetExceeded : Error {
  std::int64_t budget;
  explicit DescentBudgetExceeded(std::int64_t b, const std::string& where = {});
};

// A physical value does not fit the signed 64-bit lattice coordinate range.
struct RangeOverflow : Error {
  explicit RangeOverflow(const std::string& what);
};

// Metric tensor not invertible to working precision.
struct SingularMetricInversion : Error {
  explicit SingularMetricInversion(const std::string& where = {});
};

// |v^T g v - 1| exceeded the integrator drift tolerance (step size too large).
struct NormDriftExceeded : Error {
  double drift;
  double tolerance;
  NormDriftExceeded(double drift_, double tolerance_, double s_cm);
};

// Fewer apsides than a shift measurement needs.
struct InsufficientApsides : Error {
  InsufficientApsides();
};

// Bad key, value, or structure in a config file; line numbers are 1-based.
struct ConfigError : Error {
  int line;
  ConfigError(int line_, const std::string& message);
};

}  // namespace dgeo
