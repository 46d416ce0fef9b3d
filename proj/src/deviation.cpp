#include "dgeo/deviation.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dgeo/errors.hpp"

namespace dgeo {

namespace {

std::string probe_tag(int axis, int sign) {
  return std::string("probe F") + (sign > 0 ? "+" : "-") + "e_" + std::to_string(axis);
}

// l at a probe position, rethrowing failures tagged with the probe axis.
double probed_length(const MetricField& field, const ContinuousPoint& E, const ContinuousPoint& Fp,
                     const ContinuousPoint& G, int axis, int sign) {
  try {
    return three_point_length(field, E, Fp, G);
  } catch (const SpacelikeStep& e) {
    throw SpacelikeStep(e.quadratic_form, probe_tag(axis, sign));
  } catch (const MetricSingularity& e) {
    throw MetricSingularity(e.r_cm, e.m_cm, probe_tag(axis, sign));
  }
}

void check_axes(std::span<const int> axes, int n) {
  for (int mu : axes)
    if (mu < 0 || mu > n) throw std::invalid_argument("axis index out of range");
}

}  // namespace

std::vector<int> all_axes(int spatial_dim) {
  std::vector<int> axes(static_cast<std::size_t>(spatial_dim) + 1);
  std::iota(axes.begin(), axes.end(), 0);
  return axes;
}

std::vector<int> spatial_axes(int spatial_dim) {
  std::vector<int> axes(static_cast<std::size_t>(spatial_dim));
  std::iota(axes.begin(), axes.end(), 1);
  return axes;
}

double proper_interval(const MetricTensor& g, const ContinuousPoint& E, const ContinuousPoint& F) {
  const Displacement d = F.coords - E.coords;
  const double q = g.quadratic_form(d);
  if (q < 0.0) throw SpacelikeStep(q);
  return std::sqrt(q);
}

double three_point_length(const MetricField& field, const ContinuousPoint& E,
                          const ContinuousPoint& F, const ContinuousPoint& G) {
  return proper_interval(field.at(E), E, F) + proper_interval(field.at(F), F, G);
}

double deviation_discrete(const MetricField& field, double delta, const LatticePoint& E,
                          const LatticePoint& F, const LatticePoint& G,
                          std::span<const int> axes) {
  if (E.dim() != F.dim() || F.dim() != G.dim())
    throw std::invalid_argument("triple points must share a dimension");
  check_axes(axes, static_cast<int>(F.dim()) - 1);
  const ContinuousPoint Ec = to_physical(E, delta);
  const ContinuousPoint Gc = to_physical(G, delta);
  double w = 0.0;
  for (int mu : axes) {
    LatticePoint lo = F;
    LatticePoint hi = F;
    --lo.coords[static_cast<std::size_t>(mu)];
    ++hi.coords[static_cast<std::size_t>(mu)];
    const double l_lo = probed_length(field, Ec, to_physical(lo, delta), Gc, mu, -1);
    const double l_hi = probed_length(field, Ec, to_physical(hi, delta), Gc, mu, +1);
    const double d = (l_lo - l_hi) / 2.0;
    w += d * d;
  }
  return w;
}

double deviation_continuous_step(const MetricField& field, const ContinuousPoint& E,
                                 const ContinuousPoint& F, const ContinuousPoint& G, double h,
                                 std::span<const int> axes) {
  if (!(h > 0.0)) throw std::invalid_argument("probe step h must be > 0");
  check_axes(axes, static_cast<int>(F.coords.size()) - 1);
  double w = 0.0;
  for (int mu : axes) {
    ContinuousPoint lo = F;
    ContinuousPoint hi = F;
    lo.coords(mu) -= h;
    hi.coords(mu) += h;
    const double l_lo = probed_length(field, E, lo, G, mu, -1);
    const double l_hi = probed_length(field, E, hi, G, mu, +1);
    const double d = (l_lo - l_hi) / (2.0 * h);
    w += d * d;
  }
  return w;
}

double deviation_continuous(const MetricField& field, const ContinuousPoint& E,
                            const ContinuousPoint& F, const ContinuousPoint& G,
                            std::span<const int> axes, double eta) {
  if (!(eta > 0.0) || !(eta < 1.0))
    throw std::invalid_argument("probe fraction eta must satisfy 0 < eta < 1");
  const double l = three_point_length(field, E, F, G);
  if (l == 0.0) throw ZeroLength();
  return deviation_continuous_step(field, E, F, G, eta * l, axes);
}

}  // namespace dgeo
