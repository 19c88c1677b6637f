#include "elax/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numeric>

#include "json.hpp"

#include "elax/concentration.hpp"
#include "elax/errors.hpp"
#include "elax/galerkin.hpp"
#include "elax/io.hpp"
#include "elax/weakform.hpp"

namespace elax {

namespace {

namespace fs = std::filesystem;

RunParameters::Mode director_mode(const std::string& mode) {
  return mode == "sphere" ? RunParameters::Mode::sphere : RunParameters::Mode::gl;
}

std::vector<ProbePoint> default_probes(const MeridianGrid& grid) {
  double zmid = 0.5 * (grid.z_min + grid.z_max);
  double rad = 0.15 * grid.r_max;
  return {{0.0, zmid, rad}, {0.5 * grid.r_max, zmid, rad}};
}

double resolve_eps0_sq(const AnalysisConfig& analysis, const Trajectory& traj) {
  if (analysis.eps0_sq > 0.0) return analysis.eps0_sq;
  double e0 = traj.records.front().total_energy();
  return 0.1 * e0 / traj.grid.r_max;
}

}  // namespace

SystemState initial_state(const Scenario& scenario, const MeridianGrid& grid,
                          RunParameters::Mode mode) {
  SystemState state;
  state.flow = flow_from_streamfunction(scenario.psi0, grid);
  if (mode == RunParameters::Mode::sphere) {
    state.director.rep = DirectorState::Rep::sphere;
    state.director.phi = scenario.phi0;
    sync_sphere_components(state.director);
  } else {
    Field rho(grid.n_r, grid.n_z, 1.0);
    state.director = polar_to_cartesian(rho, scenario.phi0);
  }
  state.time = 0.0;
  return state;
}

double resolve_dt(const RunConfig& cfg, const MeridianGrid& grid, const RunParameters& params,
                  double max_u0) {
  if (!cfg.dt_auto) return cfg.dt;
  return cfg.dt_safety * stable_dt_bound(grid, params, max_u0);
}

Trajectory run_simulation(const MeridianGrid& grid, const RunParameters& params,
                          const Scenario& scenario, int snapshot_cadence) {
  if (snapshot_cadence < 1) throw ConfigError("run_simulation: snapshot cadence must be >= 1");
  Stepper stepper(grid, params, scenario.bc);
  const Field* source =
      scenario.vorticity_source ? &*scenario.vorticity_source : nullptr;

  Trajectory traj;
  traj.grid = grid;
  traj.params = params;
  traj.bc = scenario.bc;

  SystemState state = initial_state(scenario, grid, params.mode);
  traj.records.push_back(record_initial(state, grid, params, &scenario.bc));
  traj.snapshots.push_back(
      Snapshot{state.time, state, Field(grid.n_r, grid.n_z), Field(grid.n_r, grid.n_z)});

  int n_steps = static_cast<int>(std::ceil(params.t_end / params.dt - 1e-12));
  for (int step = 1; step <= n_steps; ++step) {
    DirectorState prev = state.director;
    stepper.step(state, source);
    DiagnosticsRecord rec = record_step(state, prev, grid, params, &scenario.bc);
    traj.records.push_back(rec);
    if (rec.max_d > 1.1)
      throw SolverError("run_simulation: max|d| exceeded 1.1 at t = " +
                        std::to_string(state.time) + " (scheme blow-up)");
    if (step % snapshot_cadence == 0 || step == n_steps) {
      TensionPair t =
          tension_field(prev, state.director, state.flow, grid, params.dt, &scenario.bc);
      traj.snapshots.push_back(
          Snapshot{state.time, state, std::move(t.tau_r), std::move(t.tau_z)});
    }
  }
  return traj;
}

namespace {

void write_state_vtk(const std::string& out_dir, const Trajectory& traj) {
  const MeridianGrid& grid = traj.grid;
  char name[64];
  for (std::size_t k = 0; k < traj.snapshots.size(); ++k) {
    const Snapshot& snap = traj.snapshots[k];
    std::snprintf(name, sizeof(name), "/psi_%04zu.vtk", k);
    write_vtk_scalar(out_dir + name, snap.state.flow.psi, grid, "psi");
    std::snprintf(name, sizeof(name), "/energy_%04zu.vtk", k);
    write_vtk_scalar(out_dir + name,
                     energy_density(snap.state.director, grid, traj.params.epsilon, &traj.bc),
                     grid, "energy_density");
  }
  const SystemState& fin = traj.snapshots.back().state;
  write_vtk_scalar(out_dir + "/final_omega.vtk", fin.flow.omega, grid, "omega");
  write_vtk_scalar(out_dir + "/final_u_r.vtk", fin.flow.u_r, grid, "u_r");
  write_vtk_scalar(out_dir + "/final_u_z.vtk", fin.flow.u_z, grid, "u_z");
  if (fin.director.rep == DirectorState::Rep::sphere) {
    write_vtk_scalar(out_dir + "/final_phi.vtk", fin.director.phi, grid, "phi");
  } else {
    write_vtk_scalar(out_dir + "/final_d_r.vtk", fin.director.d_r, grid, "d_r");
    write_vtk_scalar(out_dir + "/final_d_z.vtk", fin.director.d_z, grid, "d_z");
  }
}

}  // namespace

void analyze_and_write(const Trajectory& traj, const RunConfig& cfg, double epsilon,
                       const std::string& out_dir) {
  const MeridianGrid& grid = traj.grid;
  const Snapshot& last = traj.snapshots.back();
  Field density = energy_density(last.state.director, grid, epsilon, &traj.bc);

  std::vector<ProbePoint> probes = cfg.analysis.probes;
  if (probes.empty()) probes = default_probes(grid);
  std::vector<ConcentrationRow> rows;
  for (const auto& p : probes)
    rows.push_back({epsilon, last.time, p.r, p.z, p.radius,
                    local_scaled_energy(density, grid, p.r, p.z, p.radius)});
  write_concentration_csv(out_dir + "/concentration.csv", rows);

  double eps0_sq = resolve_eps0_sq(cfg.analysis, traj);
  SearchBox box{0.0, grid.r_max, grid.z_min, grid.z_max};
  auto scale = extract_blowup_scale(density, grid, box, eps0_sq, cfg.analysis.c_star);
  write_blowup_json(out_dir + "/blowup.json", scale, epsilon, eps0_sq, cfg.analysis.c_star, 4.0);

  // Weak-form residual and pairing table.
  double horizon = last.time;
  std::vector<WeakformRow> wrows;
  if (horizon > 0.0 && traj.snapshots.size() >= 2) {
    auto library = test_function_library(grid, horizon);
    Stepper stepper(grid, traj.params, traj.bc);
    ForceField force = stepper.ericksen_force(last.state.director);
    for (int id : cfg.analysis.test_ids) {
      const PoloidalTestFunction& fn = library.at(id - 1);
      double res_m = weak_momentum_residual(traj, fn);
      double res_d = 0.0;
      if (traj.params.mode == RunParameters::Mode::sphere) {
        DirectorTestFunction xi{fn.time_profile(), fn.time_profile(), fn.time_profile(), 1.0,
                                1.0};
        xi.p = Bump1D{0.0, 0.8 * grid.r_max};
        xi.q = Bump1D{grid.z_min + 0.1 * (grid.z_max - grid.z_min),
                      grid.z_max - 0.1 * (grid.z_max - grid.z_min)};
        res_d = weak_director_residual(traj, xi);
      }
      double t_pair = 0.5 * (fn.time_profile().a + fn.time_profile().b);
      CancellationReport rep =
          cancellation_experiment({force.f_r}, {force.f_z}, {epsilon}, grid, fn,
                                  cfg.analysis.k_list, t_pair);
      for (std::size_t kk = 0; kk < cfg.analysis.k_list.size(); ++kk)
        wrows.push_back({fn.id(), epsilon, cfg.analysis.k_list[kk], rep.pairing_r[0],
                         rep.pairing_z[0][kk], res_m, res_d});
    }
  }
  write_weakform_csv(out_dir + "/weakform.csv", wrows);
}

Trajectory run_and_write(const RunConfig& cfg, double epsilon, const std::string& out_dir) {
  fs::create_directories(out_dir);
  MeridianGrid grid = build_grid(cfg.r_max, cfg.z_min, cfg.z_max, cfg.n_r, cfg.n_z);
  Scenario scenario = make_scenario(cfg.scenario, cfg.scenario_params, grid);

  RunParameters params;
  params.mode = director_mode(cfg.mode);
  params.epsilon = epsilon;
  params.t_end = cfg.t_end;
  params.advection = cfg.advection;

  SystemState init = initial_state(scenario, grid, params.mode);
  double max_u0 = std::max(init.flow.u_r.max_abs_interior(), init.flow.u_z.max_abs_interior());
  params.dt = resolve_dt(cfg, grid, params, max_u0);

  write_text_file(out_dir + "/resolved_config.json", resolved_config_json(cfg));

  Trajectory traj;
  if (cfg.mode == "galerkin") {
    StokesOperators ops = assemble_stokes_operator(grid);
    StokesEigenbasis basis = compute_eigenbasis(ops, grid, cfg.galerkin_m);
    write_eigenbasis_json(out_dir + "/eigenbasis.json", basis, grid);
    traj = galerkin_run(grid, params, scenario.bc, basis, init, cfg.snapshot_cadence);
  } else {
    traj = run_simulation(grid, params, scenario, cfg.snapshot_cadence);
  }
  write_diagnostics_csv(out_dir + "/diagnostics.csv", traj.records);
  write_state_vtk(out_dir, traj);
  analyze_and_write(traj, cfg, epsilon, out_dir);
  return traj;
}

void sweep_and_write(const RunConfig& cfg, const std::string& out_dir) {
  fs::create_directories(out_dir);
  MeridianGrid grid = build_grid(cfg.r_max, cfg.z_min, cfg.z_max, cfg.n_r, cfg.n_z);

  std::vector<double> eps = cfg.epsilon_list;
  std::sort(eps.begin(), eps.end(), std::greater<double>());

  nlohmann::ordered_json summary;
  summary["epsilon_list"] = eps;
  nlohmann::ordered_json runs = nlohmann::ordered_json::array();

  std::vector<Trajectory> trajs;
  std::vector<double> ok_eps;
  for (std::size_t k = 0; k < eps.size(); ++k) {
    char sub[32];
    std::snprintf(sub, sizeof(sub), "/eps_%02zu", k);
    nlohmann::ordered_json entry;
    entry["epsilon"] = eps[k];
    try {
      Trajectory traj = run_and_write(cfg, eps[k], out_dir + sub);
      entry["status"] = "ok";
      entry["final_energy"] = traj.records.back().total_energy();
      entry["final_lambda_t"] = traj.records.back().lambda_t;
      trajs.push_back(std::move(traj));
      ok_eps.push_back(eps[k]);
    } catch (const std::exception& e) {
      entry["status"] = "failed";
      entry["error"] = e.what();
    }
    runs.push_back(entry);
  }
  summary["runs"] = runs;

  if (trajs.size() >= 2) {
    // Cross-epsilon reports at the shared final time (the latest common
    // sample; its goodness per run is recorded above via final_lambda_t).
    std::vector<DirectorState> directors;
    for (const auto& t : trajs) directors.push_back(t.snapshots.back().state.director);
    std::vector<ProbePoint> probes = cfg.analysis.probes;
    if (probes.empty()) probes = default_probes(grid);
    AxisOffaxisReport rep = axis_vs_offaxis_report(directors, ok_eps, grid, probes);
    nlohmann::ordered_json conc;
    conc["ok"] = rep.ok;
    conc["offaxis_flags"] = rep.offaxis_flags;
    conc["onaxis_growth"] = rep.onaxis_growth;
    nlohmann::ordered_json vals = nlohmann::ordered_json::array();
    for (const auto& row : rep.values) vals.push_back(row);
    conc["scaled_energies"] = vals;
    summary["axis_vs_offaxis"] = conc;

    std::vector<Field> f_r, f_z;
    for (std::size_t k = 0; k < trajs.size(); ++k) {
      Stepper stepper(grid, trajs[k].params, trajs[k].bc);
      ForceField f = stepper.ericksen_force(trajs[k].snapshots.back().state.director);
      f_r.push_back(std::move(f.f_r));
      f_z.push_back(std::move(f.f_z));
    }
    auto library = test_function_library(grid, std::max(cfg.t_end, 1e-9));
    const PoloidalTestFunction& fn = library.at(cfg.analysis.test_ids.at(0) - 1);
    double t_pair = 0.5 * (fn.time_profile().a + fn.time_profile().b);
    CancellationReport can =
        cancellation_experiment(f_r, f_z, ok_eps, grid, fn, cfg.analysis.k_list, t_pair);
    nlohmann::ordered_json cj;
    cj["test_id"] = fn.id();
    cj["mass_r"] = can.mass_r;
    cj["pairing_r"] = can.pairing_r;
    nlohmann::ordered_json pz = nlohmann::ordered_json::array();
    for (const auto& row : can.pairing_z) pz.push_back(row);
    cj["pairing_z"] = pz;
    cj["k_list"] = can.k_list;
    summary["cancellation"] = cj;
  }

  write_text_file(out_dir + "/sweep_summary.json", summary.dump(2) + "\n");
}

}  // namespace elax
