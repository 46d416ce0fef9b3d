#pragma once

#include <vector>

#include "dgeo/config.hpp"
#include "dgeo/orbit.hpp"
#include "dgeo/solver.hpp"

namespace dgeo {

// One engine's processed output: physical series plus orbit analysis.
struct EngineOutput {
  std::vector<OrbitSample> series;
  std::vector<ApsisEvent> apsides;
  std::vector<ShiftMeasurement> shifts;
};

// Fills apsides/shifts from the series (no-ops when too short to analyze).
void analyze_series(EngineOutput& out);

// Lattice gradient-descent engine; stores the raw trajectory when asked.
EngineOutput run_lattice(const RunConfig& cfg, Trajectory* traj_out = nullptr);

// Continuum geodesic-ODE engine sampled on the same lattice timeline.
EngineOutput run_reference(const RunConfig& cfg);

}  // namespace dgeo
