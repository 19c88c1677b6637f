#pragma once

#include <string>
#include <vector>

namespace elax {

// One acceptance criterion outcome. `detail` carries the measured numbers so
// a failing line is diagnosable without re-running.
struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs the full acceptance suite. `scratch_dir` receives the file outputs of
// the determinism criterion and may be deleted afterwards.
std::vector<CriterionResult> run_acceptance(const std::string& scratch_dir);

}  // namespace elax
