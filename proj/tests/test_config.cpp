#include "doctest.h"
#include "elax/config.hpp"
#include "elax/errors.hpp"

using namespace elax;

namespace {

const char* kMinimal = R"({"grid": {"r_max": 1.0, "z_min": -1.0, "z_max": 1.0,
                                    "n_r": 32, "n_z": 64}})";

}

TEST_CASE("minimal config parses with defaults") {
  RunConfig cfg = parse_config(kMinimal);
  CHECK(cfg.n_r == 32);
  CHECK(cfg.n_z == 64);
  CHECK(cfg.mode == "gl");
  CHECK(cfg.dt_auto);
  CHECK(cfg.epsilon_list.size() == 1);
  CHECK(cfg.epsilon_list[0] == doctest::Approx(0.1));
  CHECK(cfg.scenario == "uniform");
}

TEST_CASE("unknown keys fail closed with a key path") {
  const char* bad = R"({"grid": {"r_max": 1, "z_min": 0, "z_max": 1, "n_r": 8, "n_z": 8},
                        "scenaro": "hedgehog"})";
  CHECK_THROWS_AS(parse_config(bad), ConfigError);
  const char* bad_nested = R"({"grid": {"r_max": 1, "z_min": 0, "z_max": 1,
                                         "n_r": 8, "n_z": 8, "nr": 8}})";
  try {
    parse_config(bad_nested);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("grid.nr") != std::string::npos);
  }
}

TEST_CASE("epsilon and epsilon_list are mutually exclusive") {
  const char* both = R"({"grid": {"r_max": 1, "z_min": 0, "z_max": 1, "n_r": 8, "n_z": 8},
                         "epsilon": 0.1, "epsilon_list": [0.1, 0.05]})";
  CHECK_THROWS_AS(parse_config(both), ConfigError);
  const char* list = R"({"grid": {"r_max": 1, "z_min": 0, "z_max": 1, "n_r": 8, "n_z": 8},
                         "epsilon_list": [0.2, 0.1]})";
  RunConfig cfg = parse_config(list);
  CHECK(cfg.epsilon_list.size() == 2);
}

TEST_CASE("dt accepts auto or a positive number") {
  const char* autodt = R"({"grid": {"r_max": 1, "z_min": 0, "z_max": 1, "n_r": 8, "n_z": 8},
                           "dt": "auto"})";
  CHECK(parse_config(autodt).dt_auto);
  const char* fixed = R"({"grid": {"r_max": 1, "z_min": 0, "z_max": 1, "n_r": 8, "n_z": 8},
                          "dt": 1e-4})";
  RunConfig cfg = parse_config(fixed);
  CHECK_FALSE(cfg.dt_auto);
  CHECK(cfg.dt == doctest::Approx(1e-4));
  const char* neg = R"({"grid": {"r_max": 1, "z_min": 0, "z_max": 1, "n_r": 8, "n_z": 8},
                        "dt": -1e-4})";
  CHECK_THROWS_AS(parse_config(neg), ConfigError);
}

TEST_CASE("resolved config round-trips through the parser") {
  const char* full = R"({"grid": {"r_max": 1.0, "z_min": -1.0, "z_max": 1.0,
                                  "n_r": 16, "n_z": 32},
                         "mode": "sphere", "epsilon_list": [0.2, 0.1], "t_end": 0.05,
                         "scenario": {"id": "hedgehog", "lambda_core": 0.3}})";
  RunConfig cfg = parse_config(full);
  std::string echoed = resolved_config_json(cfg);
  RunConfig again = parse_config(echoed);
  CHECK(resolved_config_json(again) == echoed);
  CHECK(again.scenario_params.lambda_core == doctest::Approx(0.3));
  CHECK(again.mode == "sphere");
}

TEST_CASE("grid section is required") {
  CHECK_THROWS_AS(parse_config("{}"), ConfigError);
  CHECK_THROWS_AS(parse_config("not json"), ConfigError);
}
