#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <string>

#include <Eigen/Core>

#include "CLI11.hpp"

#include "elax/acceptance.hpp"
#include "elax/config.hpp"
#include "elax/errors.hpp"
#include "elax/galerkin.hpp"
#include "elax/io.hpp"
#include "elax/simulation.hpp"

namespace {

int resolve_threads(int cli_threads) {
  if (cli_threads > 0) return cli_threads;
  if (const char* env = std::getenv("EL_AXISYM_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

elax::RunConfig load(const std::string& config_path, const std::string& mode_override) {
  if (config_path.empty()) throw elax::ConfigError("missing --config PATH");
  elax::RunConfig cfg = elax::load_config(config_path);
  if (!mode_override.empty()) {
    if (mode_override != "gl" && mode_override != "sphere" && mode_override != "galerkin")
      throw elax::ConfigError("--mode must be one of gl, sphere, galerkin");
    cfg.mode = mode_override;
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Axisymmetric no-swirl liquid-crystal flow solver"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_dir, mode_override;
  int threads = 0;
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--out", out_dir, "output directory (overrides config out_dir)");
  app.add_option("--threads", threads, "worker threads (EL_AXISYM_THREADS fallback)");
  app.add_option("--mode", mode_override, "override solver mode: gl | sphere | galerkin");

  CLI::App* cmd_run = app.add_subcommand("run", "single run at the first epsilon");
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "one run per epsilon_list entry");
  CLI::App* cmd_analyze =
      app.add_subcommand("analyze", "recompute analysis products for a config");
  CLI::App* cmd_eig = app.add_subcommand("eig", "build and export the Stokes eigenbasis");
  CLI::App* cmd_selftest = app.add_subcommand("selftest", "run the acceptance suite");

  CLI11_PARSE(app, argc, argv);

  // The solver is strictly serial for determinism; the thread setting only
  // caps Eigen's internal parallelism (a no-op for the sparse direct path).
  Eigen::setNbThreads(resolve_threads(threads));

  try {
    if (cmd_selftest->parsed()) {
      std::string scratch = out_dir.empty() ? "selftest_out" : out_dir;
      auto results = elax::run_acceptance(scratch);
      bool all_ok = true;
      for (const auto& r : results) {
        std::printf("[%s] %2d %-30s %s\n", r.pass ? "PASS" : "FAIL", r.index, r.name.c_str(),
                    r.detail.c_str());
        all_ok = all_ok && r.pass;
      }
      return all_ok ? 0 : 4;
    }

    elax::RunConfig cfg = load(config_path, mode_override);
    std::string out = out_dir.empty() ? cfg.out_dir : out_dir;

    if (cmd_run->parsed()) {
      elax::run_and_write(cfg, cfg.epsilon_list.front(), out);
    } else if (cmd_sweep->parsed()) {
      elax::sweep_and_write(cfg, out);
    } else if (cmd_analyze->parsed()) {
      // No checkpointing by design: the trajectory is recomputed
      // deterministically, then only the analysis products are rewritten.
      elax::Trajectory traj = elax::run_and_write(cfg, cfg.epsilon_list.front(), out);
      elax::analyze_and_write(traj, cfg, cfg.epsilon_list.front(), out);
    } else if (cmd_eig->parsed()) {
      elax::MeridianGrid grid =
          elax::build_grid(cfg.r_max, cfg.z_min, cfg.z_max, cfg.n_r, cfg.n_z);
      elax::StokesOperators ops = elax::assemble_stokes_operator(grid);
      elax::StokesEigenbasis basis = elax::compute_eigenbasis(ops, grid, cfg.galerkin_m);
      std::filesystem::create_directories(out);
      elax::write_eigenbasis_json(out + "/eigenbasis.json", basis, grid);
    }
  } catch (const elax::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const elax::SolverError& e) {
    std::fprintf(stderr, "solver error: %s\n", e.what());
    return 3;
  } catch (const elax::AnalysisError& e) {
    std::fprintf(stderr, "analysis error: %s\n", e.what());
    return 4;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
