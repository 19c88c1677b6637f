#pragma once

#include <functional>
#include <optional>
#include <string>

#include "elax/dynamics.hpp"
#include "elax/field.hpp"
#include "elax/grid.hpp"

namespace elax {

struct ScenarioParams {
  double lambda_core = 0.5;  // hedgehog core scale
  double sign = 1.0;         // axis_defect orientation
  double amplitude = 1.0;    // vortex_ring / manufactured strength
  double radius = 0.25;      // vortex_ring half-width
};

struct Scenario {
  std::string id;
  Field psi0;   // initial stream function
  Field phi0;   // initial angle (rho0 = 1 for GL runs)
  DirectorBc bc;
  // Steady vorticity forcing; set only by the manufactured scenario.
  std::optional<Field> vorticity_source;
};

// Dirichlet traces for the director sampled from an angle function on the
// three outer walls.
DirectorBc director_bc_from_angle(const std::function<double(double, double)>& phi,
                                  const MeridianGrid& grid);

// id in {uniform, hedgehog, hedgehog_pair, axis_defect, vortex_ring,
// manufactured}; unknown ids are rejected. phi0(0,z) lands in pi*Z for every
// member (axis compatibility of the director).
Scenario make_scenario(const std::string& id, const ScenarioParams& params,
                       const MeridianGrid& grid);

}  // namespace elax
