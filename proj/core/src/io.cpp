#include "elax/io.hpp"

#include <charconv>
#include <fstream>

#include "json.hpp"

#include "elax/errors.hpp"

namespace elax {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw AnalysisError("cannot open output file: " + path);
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagnosticsRecord>& records) {
  auto out = open_out(path);
  out << "time,E_kin,E_el,E_pen,D_visc,D_tension,max_d,Lambda_t\n";
  for (const auto& r : records)
    out << format_double(r.time) << ',' << format_double(r.e_kin) << ',' << format_double(r.e_el)
        << ',' << format_double(r.e_pen) << ',' << format_double(r.d_visc) << ','
        << format_double(r.d_tension) << ',' << format_double(r.max_d) << ','
        << format_double(r.lambda_t) << '\n';
}

void write_concentration_csv(const std::string& path, const std::vector<ConcentrationRow>& rows) {
  auto out = open_out(path);
  out << "epsilon,time,probe_r,probe_z,radius,scaled_energy\n";
  for (const auto& r : rows)
    out << format_double(r.epsilon) << ',' << format_double(r.time) << ','
        << format_double(r.probe_r) << ',' << format_double(r.probe_z) << ','
        << format_double(r.radius) << ',' << format_double(r.scaled_energy) << '\n';
}

void write_blowup_json(const std::string& path, const std::optional<BlowupScale>& scale,
                       double epsilon, double eps0_sq, double c_star, double window_radius) {
  nlohmann::ordered_json doc;
  doc["epsilon"] = epsilon;
  doc["eps0_sq"] = eps0_sq;
  doc["c_star"] = c_star;
  if (scale) {
    doc["found"] = true;
    doc["lambda_e"] = scale->lambda_e;
    doc["center"] = {{"r", scale->r}, {"z", scale->z}};
    doc["theta"] = scale->theta;
    doc["regime"] = classify_regime(scale->lambda_e, epsilon).name();
    doc["window"] = {{"radius", window_radius}, {"units", "rescaled"}};
  } else {
    doc["found"] = false;
  }
  open_out(path) << doc.dump(2) << '\n';
}

void write_weakform_csv(const std::string& path, const std::vector<WeakformRow>& rows) {
  auto out = open_out(path);
  out << "test_id,epsilon,k,pairing_r,pairing_z,residual_momentum,residual_director\n";
  for (const auto& r : rows)
    out << r.test_id << ',' << format_double(r.epsilon) << ',' << format_double(r.k) << ','
        << format_double(r.pairing_r) << ',' << format_double(r.pairing_z) << ','
        << format_double(r.residual_momentum) << ',' << format_double(r.residual_director)
        << '\n';
}

void write_eigenbasis_json(const std::string& path, const StokesEigenbasis& basis,
                           const MeridianGrid& grid) {
  nlohmann::ordered_json doc;
  doc["m"] = basis.m;
  doc["eigenvalues"] = basis.eigenvalues;
  doc["grid"] = {{"r_max", grid.r_max}, {"z_min", grid.z_min}, {"z_max", grid.z_max},
                 {"n_r", grid.n_r},     {"n_z", grid.n_z}};
  open_out(path) << doc.dump(2) << '\n';
}

void write_vtk_scalar(const std::string& path, const Field& field, const MeridianGrid& grid,
                      const std::string& name) {
  auto out = open_out(path);
  out << "# vtk DataFile Version 3.0\n"
      << name << "\nASCII\nDATASET STRUCTURED_POINTS\n"
      << "DIMENSIONS " << grid.n_r << ' ' << grid.n_z << " 1\n"
      << "ORIGIN " << format_double(grid.r(0)) << ' ' << format_double(grid.z(0)) << " 0\n"
      << "SPACING " << format_double(grid.h_r) << ' ' << format_double(grid.h_z) << " 1\n"
      << "POINT_DATA " << grid.n_r * grid.n_z << "\nSCALARS " << name
      << " double 1\nLOOKUP_TABLE default\n";
  for (int j = 0; j < grid.n_z; ++j)
    for (int i = 0; i < grid.n_r; ++i) out << format_double(field(i, j)) << '\n';
}

void write_text_file(const std::string& path, const std::string& content) {
  open_out(path) << content;
}

}  // namespace elax
