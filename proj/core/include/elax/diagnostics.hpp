#pragma once

#include <vector>

#include "elax/dynamics.hpp"
#include "elax/field.hpp"
#include "elax/grid.hpp"
#include "elax/state.hpp"

namespace elax {

// One row of diagnostics.csv. lambda_t is the per-time tension norm
// int |tau(t)|^2, the discrete stand-in for Lambda(t).
struct DiagnosticsRecord {
  double time = 0.0;
  double e_kin = 0.0;
  double e_el = 0.0;
  double e_pen = 0.0;
  double d_visc = 0.0;
  double d_tension = 0.0;
  double max_d = 0.0;
  double lambda_t = 0.0;

  double total_energy() const { return e_kin + e_el + e_pen; }
  double dissipation() const { return d_visc + d_tension; }
};

struct Snapshot {
  double time = 0.0;
  SystemState state;
  // Tension tau = (d_{n+1} - d_n)/dt + (u . grad) d_n at this time (zero for
  // the initial snapshot).
  Field tau_r, tau_z;
};

struct Trajectory {
  MeridianGrid grid;
  RunParameters params;
  DirectorBc bc;
  std::vector<DiagnosticsRecord> records;
  std::vector<Snapshot> snapshots;
};

// Fills halos of the authoritative director components in place. When bc is
// null the outer boundary is extended by reflection (Neumann).
void fill_director_ghosts(DirectorState& director, const MeridianGrid& grid, const DirectorBc* bc);

// Cartesian director components with halos filled, independent of the
// authoritative representation (sphere: (sin phi, cos phi) of the ghost-filled
// angle).
void cartesian_with_halos(const DirectorState& director, const MeridianGrid& grid,
                          const DirectorBc* bc, Field* d_r, Field* d_z);

// Pointwise GL energy density (elastic + penalty, including the
// axisymmetric d_r^2/r^2 term); in sphere mode the penalty part is zero.
Field energy_density(const DirectorState& director, const MeridianGrid& grid, double epsilon,
                     const DirectorBc* bc = nullptr);

// Elastic / penalty split of integrate_meridian(energy_density).
struct EnergySplit {
  double elastic = 0.0;
  double penalty = 0.0;
};
EnergySplit energy_split(const DirectorState& director, const MeridianGrid& grid, double epsilon,
                         const DirectorBc* bc = nullptr);

// Tension tau = (d_next - d_prev)/dt + (u . grad) d_prev, centered advection
// on ghost-filled d_prev. In sphere mode both components come from the chain
// rule on phi, so |d| = 1 is exact.
struct TensionPair {
  Field tau_r, tau_z;
};
TensionPair tension_field(const DirectorState& prev, const DirectorState& next,
                          const FlowState& flow, const MeridianGrid& grid, double dt,
                          const DirectorBc* bc = nullptr);

// Full record for the state reached after a step from prev_director.
DiagnosticsRecord record_step(const SystemState& state, const DirectorState& prev_director,
                              const MeridianGrid& grid, const RunParameters& params,
                              const DirectorBc* bc = nullptr);

// Record for an initial state (tau = 0).
DiagnosticsRecord record_initial(const SystemState& state, const MeridianGrid& grid,
                                 const RunParameters& params, const DirectorBc* bc = nullptr);

struct EnergyReport {
  std::vector<double> residuals;  // E(t_n) + sum dt*D - E(0), one per record
  double tolerance = 0.0;         // 1e-3 * E(0)
  std::vector<int> flagged;       // indices with residual > tolerance
  bool ok = true;
};
EnergyReport check_energy_inequality(const std::vector<DiagnosticsRecord>& records);

struct GoodTimeReport {
  double lambda = 0.0;
  std::vector<double> good_times;
  std::vector<double> bad_times;
  double bad_fraction = 0.0;  // measure of bad set / T
  double bound = 0.0;         // E0 / (lambda * T)
  bool bound_holds = true;    // bad_fraction <= bound + one-sample slack
};
GoodTimeReport classify_good_times(const std::vector<DiagnosticsRecord>& records, double lambda);

struct MonotonicityReport {
  double psi_small = 0.0;
  double psi_large = 0.0;
  bool holds = false;       // psi_small <= psi_large (up to 5% slack)
  double weak_lhs = 0.0;    // r^-1 int_{B_r} |grad d|^2
  double weak_rhs = 0.0;    // 2 R^-1 int_{B_R} |grad d|^2 + 4 Lambda R
  bool weak_holds = false;
};

// Psi_r(d, p0) = (1/r) int_{B_r(p0)} (|grad d|^2/2 - <(p-p0).grad d, tau>)
//              + (1/2) int_{B_r(p0)} |p-p0| |tau|^2
// over the 3-D axisymmetric extension, p0 = (r0, 0, z0) off-axis.
MonotonicityReport almost_monotonicity(const DirectorState& director, const TensionPair& tension,
                                       const MeridianGrid& grid, double r0, double z0,
                                       double r_small, double r_large,
                                       const DirectorBc* bc = nullptr);

}  // namespace elax
