#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "elax/io.hpp"

using namespace elax;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("format_double is shortest round-trip") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-17, 0.0, 12345.6789, 1e300}) {
    std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(2.0) == "2");
}

TEST_CASE("diagnostics csv has the documented schema") {
  std::vector<DiagnosticsRecord> recs(2);
  recs[1].time = 0.25;
  recs[1].e_kin = 1.5;
  recs[1].lambda_t = 3.0;
  std::string path = "test_io_diag.csv";
  write_diagnostics_csv(path, recs);
  std::string body = slurp(path);
  CHECK(body.rfind("time,E_kin,E_el,E_pen,D_visc,D_tension,max_d,Lambda_t\n", 0) == 0);
  CHECK(body.find("\n0.25,1.5,0,0,0,0,0,3\n") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("blowup json records the regime label") {
  BlowupScale scale{0.05, 0.3, 0.4, 1.2};
  std::string path = "test_io_blowup.json";
  write_blowup_json(path, scale, 0.1, 0.02, 40.0, 4.0);
  std::string body = slurp(path);
  CHECK(body.find("\"lambda_e\"") != std::string::npos);
  CHECK(body.find("\"regime\"") != std::string::npos);
  CHECK(body.find("\"center\"") != std::string::npos);
  std::remove(path.c_str());

  write_blowup_json(path, std::nullopt, 0.1, 0.02, 40.0, 4.0);
  body = slurp(path);
  CHECK(body.find("\"found\": false") != std::string::npos);
  CHECK(body.find("\"lambda_e\"") == std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("vtk export writes a legacy structured-points header") {
  MeridianGrid grid = build_grid(1.0, 0.0, 1.0, 4, 4);
  Field f = grid.make_field(2.0);
  std::string path = "test_io_field.vtk";
  write_vtk_scalar(path, f, grid, "energy");
  std::string body = slurp(path);
  CHECK(body.rfind("# vtk DataFile Version", 0) == 0);
  CHECK(body.find("STRUCTURED_POINTS") != std::string::npos);
  CHECK(body.find("energy") != std::string::npos);
  std::remove(path.c_str());
}
