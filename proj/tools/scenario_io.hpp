#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "pgame/core.hpp"

namespace pgame::tools {

// Malformed scenarios and bad CLI usage map to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Strict parse: unknown keys are fatal, values must pass validate().
// An optional "dimensional" block {L, v1, v2max} supplies the speed ratio
// and length scale; positions and radii are then given in length units.
ScenarioConfig parse_scenario(const nlohmann::json& doc);
ScenarioConfig load_scenario(const std::string& path);

nlohmann::ordered_json scenario_to_json(const ScenarioConfig& config);
void save_scenario(const ScenarioConfig& config, const std::string& path);

}  // namespace pgame::tools
