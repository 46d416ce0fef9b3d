#include "dgeo/types.hpp"

#include <stdexcept>

namespace dgeo {

ContinuousPoint to_physical(const LatticePoint& p, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("cell size delta must be > 0");
  Displacement c(static_cast<Eigen::Index>(p.dim()));
  for (std::size_t i = 0; i < p.dim(); ++i)
    c(static_cast<Eigen::Index>(i)) = static_cast<double>(p.coords[i]) * delta;
  return ContinuousPoint{std::move(c)};
}

}  // namespace dgeo
