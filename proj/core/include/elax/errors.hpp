#pragma once

#include <stdexcept>

namespace elax {

// Bad run configuration or scenario parameters (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Linear-solver or time-stepper failure (CLI exit code 3).
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Post-processing / analysis failure (CLI exit code 4).
struct AnalysisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace elax
