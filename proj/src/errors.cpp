#include "dgeo/errors.hpp"

namespace dgeo {

namespace {

std::string suffix(const std::string& where) {
  return where.empty() ? std::string{} : " (" + where + ")";
}

}  // namespace

SpacelikeStep::SpacelikeStep(double q, const std::string& where)
    : Error("spacelike step: quadratic form " + std::to_string(q) + " < 0" + suffix(where)),
      quadratic_form(q) {}

MetricSingularity::MetricSingularity(double r, double m, const std::string& where)
    : Error("metric singularity: r = " + std::to_string(r) + " cm, horizon m = " +
            std::to_string(m) + " cm" + suffix(where)),
      r_cm(r),
      m_cm(m) {}

ZeroLength::ZeroLength() : Error("zero three-point length: relative probe step undefined") {}

DescentBudgetExceeded::DescentBudgetExceeded(std::int64_t b, const std::string& where)
    : Error("descent move budget of " + std::to_string(b) + " exhausted" + suffix(where)),
      budget(b) {}

RangeOverflow::RangeOverflow(const std::string& what)
    : Error("lattice coordinate overflow: " + what) {}

SingularMetricInversion::SingularMetricInversion(const std::string& where)
    : Error("metric tensor is not invertible" + suffix(where)) {}

NormDriftExceeded::NormDriftExceeded(double drift_, double tolerance_, double s_cm)
    : Error("velocity norm drift " + std::to_string(drift_) + " exceeds tolerance " +
            std::to_string(tolerance_) + " at s = " + std::to_string(s_cm) +
            " cm; reduce the integrator step"),
      drift(drift_),
      tolerance(tolerance_) {}

InsufficientApsides::InsufficientApsides()
    : Error("need at least two apsides of the same kind to measure a shift") {}

ConfigError::ConfigError(int line_, const std::string& message)
    : Error("config line " + std::to_string(line_) + ": " + message), line(line_) {}

}  // namespace dgeo
