#pragma once

#include <Eigen/Core>

#include <span>
#include <vector>

#include "dgeo/metric.hpp"
#include "dgeo/types.hpp"

namespace dgeo {

// Connection coefficients at one point, units 1/cm.
struct ChristoffelAtPoint {
  // gamma[lam](mu, nu); symmetric in (mu, nu) exactly as stored.
  std::vector<Eigen::MatrixXd> gamma;

  // out[lam] = sum_{mu,nu} gamma[lam](mu,nu) v^mu v^nu
  Displacement contract(const Displacement& v) const;
};

// Proper-time parametrized state: v = dx/ds, v^T g(x) v = 1 when normalized.
struct PhaseState {
  ContinuousPoint x;
  Displacement v;
};

// Central differences (g(P+h e_lam) - g(P-h e_lam)) / (2h), one tensor per
// coordinate. h <= 0 selects the field's own scale-aware step. The time
// derivative of a static field comes out exactly zero (both probes equal).
std::vector<Eigen::MatrixXd> metric_partials(const MetricField& field, const ContinuousPoint& P,
                                             double h = 0.0);

// gamma^lam_{mu nu} = (1/2) sum_k (g^-1)(lam,k) (dg[mu](k,nu) + dg[nu](k,mu)
// - dg[k](mu,nu)), symmetrized in (mu, nu) on construction.
ChristoffelAtPoint christoffel(const MetricField& field, const ContinuousPoint& P, double h = 0.0);

// Rescales a coordinate-direction velocity so that v^T g(x) v = 1.
PhaseState normalized_state(const MetricField& field, const ContinuousPoint& x,
                            const Displacement& direction);

// First-order update: v' = v - eps * Gamma(x)(v,v); x' = x + eps * v'.
PhaseState step_first_order(const MetricField& field, const PhaseState& state, double eps,
                            double h = 0.0);

struct OdeOptions {
  double ds = 1.0;               // proper-time step, cm
  double h = 0.0;                // metric partials step; <= 0 means scale-aware
  double norm_drift_tol = 1e-6;  // abort when |v^T g v - 1| exceeds this
};

struct OdeSample {
  double s;  // proper time, cm
  PhaseState state;
};

// Classical 4th-order one-step integration of dx/ds = v, dv/ds = -Gamma(v,v)
// from s = 0 to total_s. Returns the state after every step, initial included.
std::vector<OdeSample> integrate_geodesic_ode(const MetricField& field, const PhaseState& initial,
                                              double total_s, const OdeOptions& opts);

// Positions at the requested coordinate times, cubic-Hermite interpolated
// between samples (x and v = dx/ds give value and slope). Times must be
// ascending and within the sampled time span.
std::vector<ContinuousPoint> sample_at_times(std::span<const OdeSample> samples,
                                             std::span<const double> times_cm);

}  // namespace dgeo
