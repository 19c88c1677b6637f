#pragma once

#include <string>
#include <vector>

#include "elax/concentration.hpp"
#include "elax/scenario.hpp"

namespace elax {

struct AnalysisConfig {
  std::vector<ProbePoint> probes;
  std::vector<int> test_ids = {1};
  std::vector<double> k_list = {1e2, 1e4, 1e6};
  double lambda = 10.0;   // good-time threshold
  double eps0_sq = -1.0;  // <= 0: default 0.1 * E0 / r_max resolved at run time
  double c_star = 40.0;
};

struct RunConfig {
  double r_max = 1.0, z_min = -1.0, z_max = 1.0;
  int n_r = 32, n_z = 64;
  std::string mode = "gl";  // gl | sphere | galerkin
  std::vector<double> epsilon_list = {0.1};
  bool dt_auto = true;
  double dt = 0.0;         // used when !dt_auto
  double dt_safety = 0.9;  // auto policy factor
  double t_end = 0.1;
  bool advection = true;
  std::string scenario = "uniform";
  ScenarioParams scenario_params;
  std::string out_dir = "out";
  int snapshot_cadence = 50;
  int galerkin_m = 16;
  unsigned seed = 0;
  AnalysisConfig analysis;
};

// Parses and validates a JSON config (closed world: unknown keys are
// rejected, errors carry the key path). Throws ConfigError.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

// Canonical JSON echo of the fully resolved config; reparsing it yields an
// identical config.
std::string resolved_config_json(const RunConfig& cfg);

}  // namespace elax
