#pragma once

#include <Eigen/Core>

#include "dgeo/types.hpp"

namespace dgeo {

// Symmetric (n+1)x(n+1) tensor with signature (+, -, ..., -), dimensionless entries.
class MetricTensor {
 public:
  // Validates near-symmetry, then mirrors the upper triangle onto the lower
  // one so the stored entries are symmetric exactly.
  explicit MetricTensor(Eigen::MatrixXd entries);

  Eigen::Index dim() const { return g_.rows(); }
  double operator()(Eigen::Index mu, Eigen::Index nu) const { return g_(mu, nu); }
  const Eigen::MatrixXd& entries() const { return g_; }

  // d^T g d
  double quadratic_form(const Displacement& d) const;

  double determinant() const;

 private:
  Eigen::MatrixXd g_;
};

// Pure map from spacetime position to metric tensor, re-entrant and
// side-effect free.
class MetricField {
 public:
  virtual ~MetricField() = default;

  virtual int spatial_dim() const = 0;  // n
  virtual bool defined_at(const ContinuousPoint& p) const = 0;

  // Throws MetricSingularity where the field is undefined.
  virtual MetricTensor at(const ContinuousPoint& p) const = 0;

  // Finite-difference probe step (cm) appropriate near p.
  virtual double partials_step(const ContinuousPoint& p) const;
};

}  // namespace dgeo
