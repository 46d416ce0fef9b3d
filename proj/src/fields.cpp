#include "dgeo/fields.hpp"

#include <cmath>
#include <stdexcept>

#include "dgeo/errors.hpp"

namespace dgeo {

namespace {

void require_dim(const ContinuousPoint& p, int n_plus_1, const char* what) {
  if (p.coords.size() != n_plus_1) throw std::invalid_argument(what);
}

}  // namespace

MinkowskiField::MinkowskiField(int spatial_dim) : n_(spatial_dim) {
  if (n_ < 1) throw std::invalid_argument("spatial dimension must be >= 1");
}

MetricTensor MinkowskiField::at(const ContinuousPoint& p) const {
  require_dim(p, n_ + 1, "point dimension does not match the flat field");
  Eigen::MatrixXd g = -Eigen::MatrixXd::Identity(n_ + 1, n_ + 1);
  g(0, 0) = 1.0;
  return MetricTensor(std::move(g));
}

SchwarzschildField::SchwarzschildField(double m_cm) : m_(m_cm) {
  if (!(m_ > 0.0) || !std::isfinite(m_))
    throw std::invalid_argument("Schwarzschild radius must be positive and finite");
}

bool SchwarzschildField::defined_at(const ContinuousPoint& p) const {
  require_dim(p, 3, "Schwarzschild field lives in 2+1 dimensions");
  return std::hypot(p.coords(1), p.coords(2)) > m_;
}

MetricTensor SchwarzschildField::at(const ContinuousPoint& p) const {
  require_dim(p, 3, "Schwarzschild field lives in 2+1 dimensions");
  const double x = p.coords(1);
  const double y = p.coords(2);
  const double r = std::hypot(x, y);
  if (!(r > m_)) throw MetricSingularity(r, m_);
  const double r2 = r * r;
  const double rm = r - m_;
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(3, 3);
  g(0, 0) = 1.0 - m_ / r;
  g(1, 1) = -(x * x) / (r * rm) - (y * y) / r2;
  g(1, 2) = -(m_ * x * y) / (r2 * rm);
  g(2, 1) = g(1, 2);
  g(2, 2) = -(x * x) / r2 - (y * y) / (r * rm);
  return MetricTensor(std::move(g));
}

double SchwarzschildField::partials_step(const ContinuousPoint& p) const {
  require_dim(p, 3, "Schwarzschild field lives in 2+1 dimensions");
  return 1e-4 * std::hypot(p.coords(1), p.coords(2));
}

std::unique_ptr<MetricField> make_metric_field(const MetricId& id) {
  if (id.name == "schwarzschild") {
    if (id.spatial_dim != 2)
      throw std::invalid_argument("the schwarzschild field is planar (spatial_dim = 2)");
    return std::make_unique<SchwarzschildField>(id.m_cm);
  }
  if (id.name == "minkowski") return std::make_unique<MinkowskiField>(id.spatial_dim);
  throw std::invalid_argument("unknown metric '" + id.name + "'");
}

}  // namespace dgeo
