#pragma once

#include <memory>
#include <string>

#include "dgeo/metric.hpp"

namespace dgeo {

// Flat metric diag(1, -1, ..., -1) in n spatial dimensions.
class MinkowskiField final : public MetricField {
 public:
  explicit MinkowskiField(int spatial_dim = 2);

  int spatial_dim() const override { return n_; }
  bool defined_at(const ContinuousPoint&) const override { return true; }
  MetricTensor at(const ContinuousPoint& p) const override;

 private:
  int n_;
};

// Planar (2+1) Schwarzschild metric in Cartesian coordinates.
// m is the Schwarzschild radius in cm; the field is defined for r > m.
// Its determinant is identically 1.
class SchwarzschildField final : public MetricField {
 public:
  explicit SchwarzschildField(double m_cm);

  int spatial_dim() const override { return 2; }
  bool defined_at(const ContinuousPoint& p) const override;
  MetricTensor at(const ContinuousPoint& p) const override;

  // Entries vary on scale r, so the probe step tracks the radius.
  double partials_step(const ContinuousPoint& p) const override;

  double mass_cm() const { return m_; }

 private:
  double m_;
};

// Field selector carried by configs and trajectory metadata.
struct MetricId {
  std::string name;     // "schwarzschild" | "minkowski"
  double m_cm = 0.0;    // schwarzschild only
  int spatial_dim = 2;

  bool operator==(const MetricId&) const = default;
};

// Throws std::invalid_argument for unknown names or bad parameters.
std::unique_ptr<MetricField> make_metric_field(const MetricId& id);

}  // namespace dgeo
