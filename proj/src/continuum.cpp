#include "dgeo/continuum.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "dgeo/errors.hpp"

namespace dgeo {

namespace {

double resolve_step(const MetricField& field, const ContinuousPoint& P, double h) {
  const double step = h > 0.0 ? h : field.partials_step(P);
  if (!(step > 0.0)) throw std::invalid_argument("metric partials step must be > 0");
  return step;
}

double hermite(double p0, double m0, double p1, double m1, double u) {
  const double u2 = u * u;
  const double u3 = u2 * u;
  return (2 * u3 - 3 * u2 + 1) * p0 + (u3 - 2 * u2 + u) * m0 + (-2 * u3 + 3 * u2) * p1 +
         (u3 - u2) * m1;
}

double hermite_deriv(double p0, double m0, double p1, double m1, double u) {
  const double u2 = u * u;
  return (6 * u2 - 6 * u) * p0 + (3 * u2 - 4 * u + 1) * m0 + (-6 * u2 + 6 * u) * p1 +
         (3 * u2 - 2 * u) * m1;
}

}  // namespace

Displacement ChristoffelAtPoint::contract(const Displacement& v) const {
  Displacement out(static_cast<Eigen::Index>(gamma.size()));
  for (std::size_t lam = 0; lam < gamma.size(); ++lam)
    out(static_cast<Eigen::Index>(lam)) = v.dot(gamma[lam] * v);
  return out;
}

std::vector<Eigen::MatrixXd> metric_partials(const MetricField& field, const ContinuousPoint& P,
                                             double h) {
  const double step = resolve_step(field, P, h);
  const Eigen::Index dim = P.coords.size();
  std::vector<Eigen::MatrixXd> out;
  out.reserve(static_cast<std::size_t>(dim));
  for (Eigen::Index lam = 0; lam < dim; ++lam) {
    ContinuousPoint hi = P;
    ContinuousPoint lo = P;
    hi.coords(lam) += step;
    lo.coords(lam) -= step;
    out.push_back((field.at(hi).entries() - field.at(lo).entries()) / (2.0 * step));
  }
  return out;
}

ChristoffelAtPoint christoffel(const MetricField& field, const ContinuousPoint& P, double h) {
  const MetricTensor g = field.at(P);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(g.entries());
  if (!lu.isInvertible()) throw SingularMetricInversion("christoffel");
  const Eigen::MatrixXd ginv = lu.inverse();

  const std::vector<Eigen::MatrixXd> dg = metric_partials(field, P, h);
  const Eigen::Index dim = g.dim();

  ChristoffelAtPoint out;
  out.gamma.assign(static_cast<std::size_t>(dim), Eigen::MatrixXd::Zero(dim, dim));
  for (Eigen::Index lam = 0; lam < dim; ++lam) {
    for (Eigen::Index mu = 0; mu < dim; ++mu) {
      for (Eigen::Index nu = mu; nu < dim; ++nu) {
        double sum = 0.0;
        for (Eigen::Index k = 0; k < dim; ++k) {
          sum += ginv(lam, k) *
                 (dg[static_cast<std::size_t>(mu)](k, nu) + dg[static_cast<std::size_t>(nu)](k, mu) -
                  dg[static_cast<std::size_t>(k)](mu, nu));
        }
        const double value = 0.5 * sum;
        out.gamma[static_cast<std::size_t>(lam)](mu, nu) = value;
        out.gamma[static_cast<std::size_t>(lam)](nu, mu) = value;
      }
    }
  }
  return out;
}

PhaseState normalized_state(const MetricField& field, const ContinuousPoint& x,
                            const Displacement& direction) {
  const double q = field.at(x).quadratic_form(direction);
  if (q < 0.0) throw SpacelikeStep(q, "normalizing initial velocity");
  if (q == 0.0) throw std::invalid_argument("cannot proper-time normalize a lightlike velocity");
  return PhaseState{x, direction / std::sqrt(q)};
}

PhaseState step_first_order(const MetricField& field, const PhaseState& state, double eps,
                            double h) {
  if (eps < 0.0) throw std::invalid_argument("step must be >= 0");
  const ChristoffelAtPoint gam = christoffel(field, state.x, h);
  PhaseState out;
  out.v = state.v - eps * gam.contract(state.v);
  out.x.coords = state.x.coords + eps * out.v;
  return out;
}

std::vector<OdeSample> integrate_geodesic_ode(const MetricField& field, const PhaseState& initial,
                                              double total_s, const OdeOptions& opts) {
  if (!(opts.ds > 0.0)) throw std::invalid_argument("integrator step ds must be > 0");
  if (total_s < 0.0) throw std::invalid_argument("total_s must be >= 0");

  const auto drift_of = [&](const PhaseState& st) {
    return std::abs(field.at(st.x).quadratic_form(st.v) - 1.0);
  };
  const auto deriv = [&](const PhaseState& st) {
    return std::pair<Displacement, Displacement>(st.v,
                                                 -christoffel(field, st.x, opts.h).contract(st.v));
  };

  {
    const double d0 = drift_of(initial);
    if (d0 > opts.norm_drift_tol) throw NormDriftExceeded(d0, opts.norm_drift_tol, 0.0);
  }

  std::vector<OdeSample> out;
  out.push_back({0.0, initial});
  PhaseState y = initial;
  double s = 0.0;
  while (s < total_s) {
    const double step = std::min(opts.ds, total_s - s);
    const double s_next = s + step;
    if (!(step > 0.0) || s_next == s) break;

    const auto [k1x, k1v] = deriv(y);
    const auto [k2x, k2v] =
        deriv(PhaseState{ContinuousPoint{y.x.coords + (step / 2.0) * k1x}, y.v + (step / 2.0) * k1v});
    const auto [k3x, k3v] =
        deriv(PhaseState{ContinuousPoint{y.x.coords + (step / 2.0) * k2x}, y.v + (step / 2.0) * k2v});
    const auto [k4x, k4v] =
        deriv(PhaseState{ContinuousPoint{y.x.coords + step * k3x}, y.v + step * k3v});

    y.x.coords += (step / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    y.v += (step / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    s = s_next;

    const double drift = drift_of(y);
    if (drift > opts.norm_drift_tol) throw NormDriftExceeded(drift, opts.norm_drift_tol, s);
    out.push_back({s, y});
  }
  return out;
}

std::vector<ContinuousPoint> sample_at_times(std::span<const OdeSample> samples,
                                             std::span<const double> times_cm) {
  if (samples.size() < 2) throw std::invalid_argument("need at least two integrator samples");
  std::vector<ContinuousPoint> out;
  out.reserve(times_cm.size());

  std::size_t j = 0;
  for (const double t : times_cm) {
    if (t < samples.front().state.x.coords(0) - 1e-9 ||
        t > samples.back().state.x.coords(0) + 1e-9)
      throw std::invalid_argument("requested time outside the integrated span");
    while (j + 2 < samples.size() && samples[j + 1].state.x.coords(0) < t) ++j;

    const OdeSample& A = samples[j];
    const OdeSample& B = samples[j + 1];
    const double seg = B.s - A.s;
    const double t0 = A.state.x.coords(0);
    const double t1 = B.state.x.coords(0);
    const double m0 = A.state.v(0) * seg;  // slope in segment parameter u
    const double m1 = B.state.v(0) * seg;

    // Newton on the time component; the coordinate time is strictly
    // increasing along a future-directed timelike solution.
    double u = t1 != t0 ? (t - t0) / (t1 - t0) : 0.0;
    u = std::clamp(u, 0.0, 1.0);
    for (int it = 0; it < 50; ++it) {
      const double f = hermite(t0, m0, t1, m1, u) - t;
      if (std::abs(f) <= 1e-3) break;
      const double df = hermite_deriv(t0, m0, t1, m1, u);
      if (df == 0.0) break;
      u = std::clamp(u - f / df, 0.0, 1.0);
    }

    const Eigen::Index dim = A.state.x.coords.size();
    ContinuousPoint p{Displacement(dim)};
    for (Eigen::Index c = 0; c < dim; ++c) {
      p.coords(c) = hermite(A.state.x.coords(c), A.state.v(c) * seg, B.state.x.coords(c),
                            B.state.v(c) * seg, u);
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace dgeo
