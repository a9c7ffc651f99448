#include "presets.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>

#include "scenario_io.hpp"

namespace pgame::tools {

namespace {

ScenarioConfig builtin(const std::string& name) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ScenarioConfig c;
  if (name == "fig3a") {
    c.nu = 0.5;
    c.tsr_radius = 1.2;
    c.asr_radius = 0.15;
    c.attacker_start = {1.5, 1.5};
    c.defender_start_angle = 2.0 * kPi / 3.0;  // (-1/2, sqrt(3)/2)
    c.perception_mode = PerceptionMode::Constrained;
  } else if (name == "fig3b") {
    c.nu = 0.5;
    c.tsr_radius = 1.8;
    c.asr_radius = 0.5;
    c.attacker_start = {1.5, 1.5};
    c.defender_start_angle = -kPi / 8.0;
    c.perception_mode = PerceptionMode::Constrained;
  } else if (name == "fig4a" || name == "fig4b") {
    c.nu = 0.5;
    c.tsr_radius = 1.25;
    c.asr_radius = 0.25;
    c.attacker_start = {1.5 * inv_sqrt2, 1.5 * inv_sqrt2};
    c.defender_start_angle = 3.0 * kPi / 4.0;  // (-1/sqrt2, 1/sqrt2)
    c.perception_mode = name == "fig4a" ? PerceptionMode::Unconstrained
                                        : PerceptionMode::Constrained;
  } else if (name == "fig5a" || name == "fig5b") {
    c.nu = 0.47;
    c.tsr_radius = 1.5;  // fig5 constrains only the attacker: the defender
                         // sees the whole approach, so the TSR spans it
    c.asr_radius = 0.2;
    c.attacker_start = {1.5 * inv_sqrt2, 1.5 * inv_sqrt2};
    c.defender_start_angle = -kPi / 4.0;  // (1/sqrt2, -1/sqrt2)
    c.perception_mode = name == "fig5a" ? PerceptionMode::Unconstrained
                                        : PerceptionMode::Constrained;
  } else {
    throw ConfigError("unknown figure preset '" + name + "'");
  }
  return c;
}

}  // namespace

ScenarioConfig preset(const std::string& name) {
  if (const char* dir = std::getenv("PERIMETER_GAME_SEED_DIR")) {
    std::filesystem::path p = std::filesystem::path(dir) / (name + ".json");
    if (std::filesystem::exists(p)) return load_scenario(p.string());
  }
  return builtin(name);
}

std::vector<std::string> preset_names() {
  return {"fig3a", "fig3b", "fig4a", "fig4b", "fig5a", "fig5b"};
}

}  // namespace pgame::tools
