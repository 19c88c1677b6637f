#pragma once

#include <string>

#include "elax/config.hpp"
#include "elax/diagnostics.hpp"
#include "elax/dynamics.hpp"
#include "elax/scenario.hpp"

namespace elax {

// Builds the initial state for a scenario in the requested representation.
SystemState initial_state(const Scenario& scenario, const MeridianGrid& grid,
                          RunParameters::Mode mode);

// Time-step value actually used for a config: explicit dt, or the stability
// bound at the initial velocity times the safety factor.
double resolve_dt(const RunConfig& cfg, const MeridianGrid& grid, const RunParameters& params,
                  double max_u0);

// Lie-split run with per-step diagnostics and snapshots every
// snapshot_cadence steps (plus initial and final states). Aborts with
// SolverError when max|d| exceeds 1.1 (scheme blow-up flag).
Trajectory run_simulation(const MeridianGrid& grid, const RunParameters& params,
                          const Scenario& scenario, int snapshot_cadence);

// Single run for one epsilon of the config; writes diagnostics.csv,
// resolved_config.json, concentration.csv, blowup.json and VTK snapshots of
// the final state into out_dir. Returns the trajectory.
Trajectory run_and_write(const RunConfig& cfg, double epsilon, const std::string& out_dir);

// Stored-trajectory analysis: concentration probes, blow-up extraction and
// weak-form residuals; writes concentration.csv / blowup.json / weakform.csv.
void analyze_and_write(const Trajectory& traj, const RunConfig& cfg, double epsilon,
                       const std::string& out_dir);

// Epsilon sweep: one sub-directory per epsilon plus sweep_summary.json with
// the cross-epsilon concentration and cancellation reports.
void sweep_and_write(const RunConfig& cfg, const std::string& out_dir);

}  // namespace elax
