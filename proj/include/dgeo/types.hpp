#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace dgeo {

// Component vector in cm; index 0 is the time component (c = 1).
using Displacement = Eigen::VectorXd;

// Spacetime lattice site in cell units; coords[0] is time.
struct LatticePoint {
  std::vector<std::int64_t> coords;

  std::size_t dim() const { return coords.size(); }  // n + 1
  std::int64_t time() const { return coords.front(); }

  bool operator==(const LatticePoint&) const = default;
};

// Spacetime position in cm; coords[0] is time.
struct ContinuousPoint {
  Displacement coords;
};

// Physical position of a lattice site; delta = cell edge in cm, > 0.
ContinuousPoint to_physical(const LatticePoint& p, double delta);

}  // namespace dgeo
