#pragma once

#include <span>
#include <vector>

#include "dgeo/metric.hpp"
#include "dgeo/types.hpp"

namespace dgeo {

// Axis index sets over {0, ..., n}; 0 is the time axis.
std::vector<int> all_axes(int spatial_dim);
std::vector<int> spatial_axes(int spatial_dim);

// Proper time of the segment EF measured with a tensor held fixed:
// sqrt(EF^T g EF). Throws SpacelikeStep when the quadratic form is negative;
// a vanishing form (lightlike) is accepted and gives 0.
double proper_interval(const MetricTensor& g, const ContinuousPoint& E, const ContinuousPoint& F);

// d(E,F) + d(F,G), where d(P,Q) measures PQ with the metric at the first
// endpoint P.
double three_point_length(const MetricField& field, const ContinuousPoint& E,
                          const ContinuousPoint& F, const ContinuousPoint& G);

// Straightness defect of the lattice triple (E, F, G): the sum over the listed
// axes of the squared central difference of l = three_point_length under
// one-cell moves of the middle point F. Always >= 0. Probe failures
// (SpacelikeStep, MetricSingularity) propagate tagged with the probe axis.
double deviation_discrete(const MetricField& field, double delta, const LatticePoint& E,
                          const LatticePoint& F, const LatticePoint& G,
                          std::span<const int> axes);

// Same construction off-lattice: central differences of l under moves of F by
// +-h cm along each listed axis, divided by 2h and squared.
double deviation_continuous_step(const MetricField& field, const ContinuousPoint& E,
                                 const ContinuousPoint& F, const ContinuousPoint& G, double h,
                                 std::span<const int> axes);

// Probe step h = eta * l(E,F,G). Requires 0 < eta < 1; throws ZeroLength when
// l(E,F,G) = 0.
double deviation_continuous(const MetricField& field, const ContinuousPoint& E,
                            const ContinuousPoint& F, const ContinuousPoint& G,
                            std::span<const int> axes, double eta = 1e-6);

}  // namespace dgeo
