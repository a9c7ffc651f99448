#include "scenario_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace pgame::tools {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& where,
                const std::set<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key()))
      throw ConfigError("unknown key '" + it.key() + "' in " + where);
  }
}

double num(const json& obj, const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_number())
    throw ConfigError("key '" + key + "' must be a number");
  return obj.at(key).get<double>();
}

double require_num(const json& obj, const std::string& key) {
  if (!obj.contains(key)) throw ConfigError("missing key '" + key + "'");
  if (!obj.at(key).is_number())
    throw ConfigError("key '" + key + "' must be a number");
  return obj.at(key).get<double>();
}

}  // namespace

ScenarioConfig parse_scenario(const json& doc) {
  if (!doc.is_object()) throw ConfigError("scenario file must be a JSON object");
  check_keys(doc, "scenario",
             {"nu", "tsr_radius", "asr_radius", "attacker_start",
              "defender_start_angle", "perception_mode", "escape_policy",
              "solver", "dimensional"});

  ScenarioConfig cfg;
  double length_scale = 1.0;

  if (doc.contains("dimensional")) {
    const json& d = doc.at("dimensional");
    check_keys(d, "dimensional", {"L", "v1", "v2max"});
    length_scale = require_num(d, "L");
    double v1 = require_num(d, "v1");
    double v2max = require_num(d, "v2max");
    if (length_scale <= 0.0) throw ConfigError("dimensional.L must be positive");
    if (v2max <= 0.0) throw ConfigError("dimensional.v2max must be positive");
    if (doc.contains("nu"))
      throw ConfigError("'nu' conflicts with the dimensional block (v1/v2max)");
    cfg.nu = v1 / v2max;
  } else {
    cfg.nu = num(doc, "nu", cfg.nu);
  }

  cfg.tsr_radius = num(doc, "tsr_radius", cfg.tsr_radius * length_scale) / length_scale;
  cfg.asr_radius = num(doc, "asr_radius", cfg.asr_radius * length_scale) / length_scale;

  if (doc.contains("attacker_start")) {
    const json& a = doc.at("attacker_start");
    if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number())
      throw ConfigError("'attacker_start' must be a two-number array [x, y]");
    cfg.attacker_start = {a[0].get<double>() / length_scale,
                          a[1].get<double>() / length_scale};
  }
  cfg.defender_start_angle = num(doc, "defender_start_angle", cfg.defender_start_angle);

  if (doc.contains("perception_mode")) {
    std::string m = doc.at("perception_mode").get<std::string>();
    if (m == "constrained")
      cfg.perception_mode = PerceptionMode::Constrained;
    else if (m == "unconstrained")
      cfg.perception_mode = PerceptionMode::Unconstrained;
    else
      throw ConfigError("perception_mode must be 'constrained' or 'unconstrained'");
  }
  if (doc.contains("escape_policy")) {
    std::string p = doc.at("escape_policy").get<std::string>();
    if (p == "escape_at_theta_zero")
      cfg.escape_policy = EscapePolicy::EscapeAtThetaZero;
    else if (p == "surrender_on_classification")
      cfg.escape_policy = EscapePolicy::SurrenderOnClassification;
    else
      throw ConfigError(
          "escape_policy must be 'escape_at_theta_zero' or "
          "'surrender_on_classification'");
  }
  if (doc.contains("solver")) {
    const json& s = doc.at("solver");
    check_keys(s, "solver", {"step_size", "capture_tol", "event_tol"});
    cfg.solver.step_size = num(s, "step_size", cfg.solver.step_size);
    cfg.solver.capture_tol = num(s, "capture_tol", cfg.solver.capture_tol);
    cfg.solver.event_tol = num(s, "event_tol", cfg.solver.event_tol);
  }

  auto violations = validate(cfg);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "invalid scenario:";
    for (const auto& v : violations) msg << "\n  - " << v;
    throw ConfigError(msg.str());
  }
  return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("scenario parse error in " + path + ": " + e.what());
  }
  return parse_scenario(doc);
}

nlohmann::ordered_json scenario_to_json(const ScenarioConfig& cfg) {
  nlohmann::ordered_json doc;
  doc["nu"] = cfg.nu;
  doc["tsr_radius"] = cfg.tsr_radius;
  doc["asr_radius"] = cfg.asr_radius;
  doc["attacker_start"] = {cfg.attacker_start.x, cfg.attacker_start.y};
  doc["defender_start_angle"] = cfg.defender_start_angle;
  doc["perception_mode"] =
      cfg.perception_mode == PerceptionMode::Constrained ? "constrained"
                                                         : "unconstrained";
  doc["escape_policy"] = cfg.escape_policy == EscapePolicy::EscapeAtThetaZero
                             ? "escape_at_theta_zero"
                             : "surrender_on_classification";
  doc["solver"] = {{"step_size", cfg.solver.step_size},
                   {"capture_tol", cfg.solver.capture_tol},
                   {"event_tol", cfg.solver.event_tol}};
  return doc;
}

void save_scenario(const ScenarioConfig& cfg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write scenario file: " + path);
  out << scenario_to_json(cfg).dump(2) << "\n";
}

}  // namespace pgame::tools
