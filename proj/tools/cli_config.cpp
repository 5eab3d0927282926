#include "cli_config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace cli {

namespace {

using nlohmann::json;

std::string join_path(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

void check_keys(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
  if (!obj.is_object()) {
    throw config_error("config error: " + (path.empty() ? std::string("document") : path) +
                       " must be a JSON object");
  }
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      throw config_error("config error: unknown key: " + join_path(path, item.key()));
    }
  }
}

json load_document(const std::string& config_path) {
  if (config_path.empty()) return json::object();
  std::ifstream in(config_path);
  if (!in) throw config_error("config error: cannot open config file: " + config_path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw config_error("config error: malformed JSON in " + config_path + ": " + e.what());
  }
}

void apply_overrides(json& doc, const Overrides& ov) {
  if (ov.output) doc["output"] = *ov.output;
  if (ov.r_min) doc["grid"]["r_min"] = *ov.r_min;
  if (ov.r_max) doc["grid"]["r_max"] = *ov.r_max;
  if (ov.n_points) doc["grid"]["n_points"] = *ov.n_points;
  if (ov.seed) doc["mc"]["seed"] = *ov.seed;
  if (ov.n_samples) doc["mc"]["n_samples"] = *ov.n_samples;
  if (ov.dt) doc["time"]["dt"] = *ov.dt;
  if (ov.duration) doc["time"]["duration"] = *ov.duration;
}

const std::set<std::string>& params_keys_for(const std::string& command, const std::string& model) {
  static const std::set<std::string> pair_raw = {"d1", "d2", "k", "k_dir", "r_dir"};
  static const std::set<std::string> pair_averaged = {"dmag", "k", "k_dir", "r_dir"};
  static const std::set<std::string> driven = {"mu",     "intensity", "beta_pop", "gamma1",
                                               "gamma2", "delta1",    "delta2",   "k",
                                               "k_dir",  "r_dir"};
  static const std::set<std::string> bloch2 = {"atom", "field", "hbar", "initial"};
  static const std::set<std::string> dirac4 = {"p", "omega", "mu", "efield", "c", "hbar", "initial"};
  static const std::set<std::string> audit = {"dmag", "r", "k", "n_agreement"};
  static const std::set<std::string> regime = {"atom", "field", "hbar", "k_medium", "lambda", "r"};

  if (command == "audit") return audit;
  if (command == "regime") return regime;
  if (model == "pair_raw") return pair_raw;
  if (model == "pair_averaged") return pair_averaged;
  if (model == "driven") return driven;
  if (model == "bloch2") return bloch2;
  return dirac4;
}

}  // namespace

double get_number(const json& obj, const std::string& path, const std::string& key,
                  std::optional<double> fallback) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    throw config_error("config error: missing key: " + join_path(path, key));
  }
  const json& v = obj.at(key);
  if (!v.is_number()) {
    throw config_error("config error: " + join_path(path, key) + " must be a number");
  }
  return v.get<double>();
}

long long get_integer(const json& obj, const std::string& path, const std::string& key,
                      std::optional<long long> fallback) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    throw config_error("config error: missing key: " + join_path(path, key));
  }
  const json& v = obj.at(key);
  if (!v.is_number_integer()) {
    throw config_error("config error: " + join_path(path, key) + " must be an integer");
  }
  return v.get<long long>();
}

void get_vec3(const json& obj, const std::string& path, const std::string& key,
              double fallback[3], double out[3]) {
  if (!obj.contains(key)) {
    for (int i = 0; i < 3; ++i) out[i] = fallback[i];
    return;
  }
  const json& v = obj.at(key);
  if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() ||
      !v[2].is_number()) {
    throw config_error("config error: " + join_path(path, key) +
                       " must be an array of 3 numbers");
  }
  for (int i = 0; i < 3; ++i) out[i] = v[static_cast<std::size_t>(i)].get<double>();
}

RunConfig parse_config(const std::string& command, const std::string& config_path,
                       const Overrides& overrides) {
  json doc = load_document(config_path);
  if (!doc.is_object()) throw config_error("config error: document must be a JSON object");
  apply_overrides(doc, overrides);

  check_keys(doc, "", {"command", "model", "output", "params", "grid", "time", "mc"});

  RunConfig cfg;
  cfg.command = command;

  if (doc.contains("command")) {
    const json& v = doc.at("command");
    if (!v.is_string()) throw config_error("config error: command must be a string");
    if (v.get<std::string>() != command) {
      throw config_error("config error: config command '" + v.get<std::string>() +
                         "' does not match invoked command '" + command + "'");
    }
  }

  static const std::set<std::string> sweep_models = {"pair_raw", "pair_averaged", "driven"};
  static const std::set<std::string> dynamics_models = {"bloch2", "dirac4"};
  if (command == "sweep" || command == "dynamics") {
    if (!doc.contains("model") || !doc.at("model").is_string()) {
      throw config_error("config error: missing key: model");
    }
    cfg.model = doc.at("model").get<std::string>();
    const auto& valid = (command == "sweep") ? sweep_models : dynamics_models;
    if (!valid.count(cfg.model)) {
      throw config_error("config error: model '" + cfg.model + "' is not valid for " + command);
    }
  } else if (doc.contains("model")) {
    throw config_error("config error: unknown key: model (not used by " + command + ")");
  }

  if (doc.contains("output")) {
    if (!doc.at("output").is_string()) {
      throw config_error("config error: output must be a string");
    }
    cfg.output = doc.at("output").get<std::string>();
  }

  cfg.params = doc.contains("params") ? doc.at("params") : json::object();
  check_keys(cfg.params, "params", params_keys_for(command, cfg.model));
  if (cfg.params.contains("atom")) check_keys(cfg.params.at("atom"), "params.atom",
                                              {"mu", "gamma", "omega_a", "rho1", "rho2", "xi"});
  if (cfg.params.contains("field")) {
    check_keys(cfg.params.at("field"), "params.field",
               {"amplitude", "polarization", "omega0", "kvec", "intensity"});
  }

  if (command == "sweep") {
    if (!doc.contains("grid")) throw config_error("config error: missing key: grid");
    const json& g = doc.at("grid");
    check_keys(g, "grid", {"r_min", "r_max", "n_points", "spacing"});
    cfg.grid.r_min = get_number(g, "grid", "r_min");
    cfg.grid.r_max = get_number(g, "grid", "r_max");
    cfg.grid.n_points = get_integer(g, "grid", "n_points");
    std::string spacing = "linear";
    if (g.contains("spacing")) {
      if (!g.at("spacing").is_string()) {
        throw config_error("config error: grid.spacing must be a string");
      }
      spacing = g.at("spacing").get<std::string>();
    }
    if (spacing != "linear" && spacing != "log") {
      throw config_error("config error: grid.spacing must be 'linear' or 'log'");
    }
    cfg.grid.log_spacing = (spacing == "log");
    if (!(cfg.grid.r_min > 0.0)) {
      throw config_error("config error: grid.r_min must be > 0 (the grid must not span r = 0)");
    }
    if (!(cfg.grid.r_max > cfg.grid.r_min)) {
      throw config_error("config error: grid.r_max must be > grid.r_min");
    }
    if (cfg.grid.n_points < 2) throw config_error("config error: grid.n_points must be >= 2");
  } else if (doc.contains("grid")) {
    throw config_error("config error: unknown key: grid (not used by " + command + ")");
  }

  if (command == "dynamics") {
    if (!doc.contains("time")) throw config_error("config error: missing key: time");
    const json& t = doc.at("time");
    check_keys(t, "time", {"duration", "dt"});
    cfg.time.duration = get_number(t, "time", "duration");
    cfg.time.dt = get_number(t, "time", "dt");
    if (!(cfg.time.dt > 0.0)) throw config_error("config error: time.dt must be > 0");
    if (cfg.time.duration < 0.0) throw config_error("config error: time.duration must be >= 0");
  } else if (doc.contains("time")) {
    throw config_error("config error: unknown key: time (not used by " + command + ")");
  }

  if (doc.contains("mc")) {
    const json& m = doc.at("mc");
    check_keys(m, "mc", {"n_samples", "seed"});
    cfg.mc.n_samples = get_integer(m, "mc", "n_samples", cfg.mc.n_samples);
    if (m.contains("seed")) {
      if (!m.at("seed").is_number_integer() || m.at("seed").get<long long>() < 0) {
        throw config_error("config error: mc.seed must be a non-negative integer");
      }
      cfg.mc.seed = m.at("seed").get<std::uint64_t>();
    }
    if (cfg.mc.n_samples < 1000) {
      throw config_error("config error: mc.n_samples must be >= 1000");
    }
  }

  return cfg;
}

}  // namespace cli
