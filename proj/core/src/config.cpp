#include "elax/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "elax/errors.hpp"

namespace elax {

namespace {

using json = nlohmann::ordered_json;

void reject_unknown(const json& obj, const std::string& path,
                    const std::set<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw ConfigError("unknown key \"" + path + it.key() + "\"");
}

double positive(const json& obj, const std::string& path, const std::string& key, double dflt,
                bool required = false) {
  if (!obj.contains(key)) {
    if (required) throw ConfigError("missing required key \"" + path + key + "\"");
    return dflt;
  }
  if (!obj[key].is_number())
    throw ConfigError("key \"" + path + key + "\" must be a number");
  double v = obj[key].get<double>();
  if (v <= 0.0) throw ConfigError("key \"" + path + key + "\" must be positive");
  return v;
}

double number(const json& obj, const std::string& path, const std::string& key, double dflt) {
  if (!obj.contains(key)) return dflt;
  if (!obj[key].is_number())
    throw ConfigError("key \"" + path + key + "\" must be a number");
  return obj[key].get<double>();
}

int count_at_least(const json& obj, const std::string& path, const std::string& key, int dflt,
                   int min_value) {
  if (!obj.contains(key)) return dflt;
  if (!obj[key].is_number_integer())
    throw ConfigError("key \"" + path + key + "\" must be an integer");
  int v = obj[key].get<int>();
  if (v < min_value)
    throw ConfigError("key \"" + path + key + "\" must be at least " +
                      std::to_string(min_value));
  return v;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config root must be a JSON object");
  reject_unknown(doc, "",
                 {"grid", "mode", "epsilon", "epsilon_list", "dt", "t_end", "advection",
                  "scenario", "output", "galerkin", "analysis", "seed"});

  RunConfig cfg;

  if (!doc.contains("grid")) throw ConfigError("missing required key \"grid\"");
  {
    const json& g = doc["grid"];
    if (!g.is_object()) throw ConfigError("key \"grid\" must be an object");
    reject_unknown(g, "grid.", {"r_max", "z_min", "z_max", "n_r", "n_z"});
    cfg.r_max = positive(g, "grid.", "r_max", 0.0, true);
    if (!g.contains("z_min") || !g.contains("z_max"))
      throw ConfigError("missing required key \"grid.z_min\"/\"grid.z_max\"");
    cfg.z_min = number(g, "grid.", "z_min", 0.0);
    cfg.z_max = number(g, "grid.", "z_max", 0.0);
    if (cfg.z_max <= cfg.z_min) throw ConfigError("key \"grid.z_max\" must exceed \"grid.z_min\"");
    cfg.n_r = count_at_least(g, "grid.", "n_r", -1, 4);
    cfg.n_z = count_at_least(g, "grid.", "n_z", -1, 4);
    if (cfg.n_r < 0 || cfg.n_z < 0)
      throw ConfigError("missing required key \"grid.n_r\"/\"grid.n_z\"");
  }

  if (doc.contains("mode")) {
    cfg.mode = doc["mode"].get<std::string>();
    if (cfg.mode != "gl" && cfg.mode != "sphere" && cfg.mode != "galerkin")
      throw ConfigError("key \"mode\" must be one of gl, sphere, galerkin");
  }

  if (doc.contains("epsilon") && doc.contains("epsilon_list"))
    throw ConfigError("keys \"epsilon\" and \"epsilon_list\" are mutually exclusive");
  if (doc.contains("epsilon")) {
    cfg.epsilon_list = {positive(doc, "", "epsilon", 0.1)};
  } else if (doc.contains("epsilon_list")) {
    const json& el = doc["epsilon_list"];
    if (!el.is_array() || el.empty())
      throw ConfigError("key \"epsilon_list\" must be a non-empty array");
    cfg.epsilon_list.clear();
    for (std::size_t k = 0; k < el.size(); ++k) {
      if (!el[k].is_number() || el[k].get<double>() <= 0.0)
        throw ConfigError("key \"epsilon_list[" + std::to_string(k) + "]\" must be positive");
      cfg.epsilon_list.push_back(el[k].get<double>());
    }
  }

  if (doc.contains("dt")) {
    if (doc["dt"].is_string()) {
      if (doc["dt"].get<std::string>() != "auto")
        throw ConfigError("key \"dt\" must be a positive number or \"auto\"");
      cfg.dt_auto = true;
    } else {
      cfg.dt = positive(doc, "", "dt", 0.0, true);
      cfg.dt_auto = false;
    }
  }
  cfg.t_end = positive(doc, "", "t_end", cfg.t_end);
  if (doc.contains("advection")) {
    if (!doc["advection"].is_boolean()) throw ConfigError("key \"advection\" must be a boolean");
    cfg.advection = doc["advection"].get<bool>();
  }

  if (doc.contains("scenario")) {
    const json& s = doc["scenario"];
    if (s.is_string()) {
      cfg.scenario = s.get<std::string>();
    } else if (s.is_object()) {
      reject_unknown(s, "scenario.", {"id", "lambda_core", "sign", "amplitude", "radius"});
      if (!s.contains("id")) throw ConfigError("missing required key \"scenario.id\"");
      cfg.scenario = s["id"].get<std::string>();
      cfg.scenario_params.lambda_core =
          positive(s, "scenario.", "lambda_core", cfg.scenario_params.lambda_core);
      cfg.scenario_params.sign = number(s, "scenario.", "sign", cfg.scenario_params.sign);
      cfg.scenario_params.amplitude =
          number(s, "scenario.", "amplitude", cfg.scenario_params.amplitude);
      cfg.scenario_params.radius =
          positive(s, "scenario.", "radius", cfg.scenario_params.radius);
    } else {
      throw ConfigError("key \"scenario\" must be a string or object");
    }
  }

  if (doc.contains("output")) {
    const json& o = doc["output"];
    if (!o.is_object()) throw ConfigError("key \"output\" must be an object");
    reject_unknown(o, "output.", {"dir", "snapshot_cadence"});
    if (o.contains("dir")) cfg.out_dir = o["dir"].get<std::string>();
    cfg.snapshot_cadence = count_at_least(o, "output.", "snapshot_cadence", 50, 1);
  }

  if (doc.contains("galerkin")) {
    const json& g = doc["galerkin"];
    if (!g.is_object()) throw ConfigError("key \"galerkin\" must be an object");
    reject_unknown(g, "galerkin.", {"m"});
    cfg.galerkin_m = count_at_least(g, "galerkin.", "m", 16, 1);
  }

  if (doc.contains("analysis")) {
    const json& a = doc["analysis"];
    if (!a.is_object()) throw ConfigError("key \"analysis\" must be an object");
    reject_unknown(a, "analysis.",
                   {"probes", "test_ids", "k_list", "lambda", "eps0_sq", "c_star"});
    if (a.contains("probes")) {
      if (!a["probes"].is_array()) throw ConfigError("key \"analysis.probes\" must be an array");
      cfg.analysis.probes.clear();
      for (std::size_t k = 0; k < a["probes"].size(); ++k) {
        const json& p = a["probes"][k];
        std::string path = "analysis.probes[" + std::to_string(k) + "].";
        if (!p.is_object()) throw ConfigError("key \"" + path + "\" must be an object");
        reject_unknown(p, path, {"r", "z", "radius"});
        ProbePoint probe;
        probe.r = number(p, path, "r", 0.0);
        if (probe.r < 0.0) throw ConfigError("key \"" + path + "r\" must be non-negative");
        probe.z = number(p, path, "z", 0.0);
        probe.radius = positive(p, path, "radius", 0.0, true);
        cfg.analysis.probes.push_back(probe);
      }
    }
    if (a.contains("test_ids")) {
      cfg.analysis.test_ids.clear();
      for (const auto& v : a["test_ids"]) {
        int id = v.get<int>();
        if (id < 1 || id > 5)
          throw ConfigError("key \"analysis.test_ids\" entries must be in 1..5");
        cfg.analysis.test_ids.push_back(id);
      }
    }
    if (a.contains("k_list")) {
      cfg.analysis.k_list.clear();
      for (const auto& v : a["k_list"]) {
        double k = v.get<double>();
        if (k <= 1.0) throw ConfigError("key \"analysis.k_list\" entries must exceed 1");
        cfg.analysis.k_list.push_back(k);
      }
    }
    cfg.analysis.lambda = positive(a, "analysis.", "lambda", cfg.analysis.lambda);
    cfg.analysis.eps0_sq = number(a, "analysis.", "eps0_sq", cfg.analysis.eps0_sq);
    cfg.analysis.c_star = positive(a, "analysis.", "c_star", cfg.analysis.c_star);
  }

  if (doc.contains("seed")) cfg.seed = doc["seed"].get<unsigned>();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string resolved_config_json(const RunConfig& cfg) {
  json doc;
  doc["grid"] = {{"r_max", cfg.r_max}, {"z_min", cfg.z_min}, {"z_max", cfg.z_max},
                 {"n_r", cfg.n_r},     {"n_z", cfg.n_z}};
  doc["mode"] = cfg.mode;
  doc["epsilon_list"] = cfg.epsilon_list;
  if (cfg.dt_auto)
    doc["dt"] = "auto";
  else
    doc["dt"] = cfg.dt;
  doc["t_end"] = cfg.t_end;
  doc["advection"] = cfg.advection;
  doc["scenario"] = {{"id", cfg.scenario},
                     {"lambda_core", cfg.scenario_params.lambda_core},
                     {"sign", cfg.scenario_params.sign},
                     {"amplitude", cfg.scenario_params.amplitude},
                     {"radius", cfg.scenario_params.radius}};
  doc["output"] = {{"dir", cfg.out_dir}, {"snapshot_cadence", cfg.snapshot_cadence}};
  doc["galerkin"] = {{"m", cfg.galerkin_m}};
  json probes = json::array();
  for (const auto& p : cfg.analysis.probes)
    probes.push_back({{"r", p.r}, {"z", p.z}, {"radius", p.radius}});
  doc["analysis"] = {{"probes", probes},
                     {"test_ids", cfg.analysis.test_ids},
                     {"k_list", cfg.analysis.k_list},
                     {"lambda", cfg.analysis.lambda},
                     {"eps0_sq", cfg.analysis.eps0_sq},
                     {"c_star", cfg.analysis.c_star}};
  doc["seed"] = cfg.seed;
  return doc.dump(2) + "\n";
}

}  // namespace elax
