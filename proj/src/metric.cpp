#include "dgeo/metric.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace dgeo {

MetricTensor::MetricTensor(Eigen::MatrixXd entries) : g_(std::move(entries)) {
  if (g_.rows() != g_.cols() || g_.rows() < 2)
    throw std::invalid_argument("metric tensor must be square and at least 2x2");
  for (Eigen::Index i = 0; i < g_.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < g_.cols(); ++j) {
      const double a = g_(i, j);
      const double b = g_(j, i);
      const double scale = std::max({1.0, std::abs(a), std::abs(b)});
      if (!(std::abs(a - b) <= 1e-12 * scale))
        throw std::invalid_argument("metric tensor entries are not symmetric");
      g_(j, i) = a;
    }
  }
}

double MetricTensor::quadratic_form(const Displacement& d) const {
  if (d.size() != g_.rows())
    throw std::invalid_argument("displacement dimension does not match metric");
  return d.dot(g_ * d);
}

double MetricTensor::determinant() const { return g_.determinant(); }

double MetricField::partials_step(const ContinuousPoint&) const { return 1.0; }

}  // namespace dgeo
