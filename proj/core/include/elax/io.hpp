#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elax/concentration.hpp"
#include "elax/diagnostics.hpp"
#include "elax/field.hpp"
#include "elax/galerkin.hpp"
#include "elax/grid.hpp"
#include "elax/weakform.hpp"

namespace elax {

// Shortest round-trip decimal representation (<= 17 significant digits);
// byte-stable across runs.
std::string format_double(double v);

void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRecord>& records);

struct ConcentrationRow {
  double epsilon = 0.0, time = 0.0, probe_r = 0.0, probe_z = 0.0, radius = 0.0,
         scaled_energy = 0.0;
};
void write_concentration_csv(const std::string& path, const std::vector<ConcentrationRow>& rows);

void write_blowup_json(const std::string& path, const std::optional<BlowupScale>& scale,
                       double epsilon, double eps0_sq, double c_star, double window_radius);

struct WeakformRow {
  int test_id = 0;
  double epsilon = 0.0, k = 0.0, pairing_r = 0.0, pairing_z = 0.0, residual_momentum = 0.0,
         residual_director = 0.0;
};
void write_weakform_csv(const std::string& path, const std::vector<WeakformRow>& rows);

void write_eigenbasis_json(const std::string& path, const StokesEigenbasis& basis,
                           const MeridianGrid& grid);

// Legacy ASCII STRUCTURED_POINTS with one scalar per file, cell-centered data
// reported at cell centers.
void write_vtk_scalar(const std::string& path, const Field& field, const MeridianGrid& grid,
                      const std::string& name);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace elax
