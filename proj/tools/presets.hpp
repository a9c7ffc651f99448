#pragma once

#include <string>
#include <vector>

#include "pgame/core.hpp"

namespace pgame::tools {

// Figure presets fig3a..fig5b. When PERIMETER_GAME_SEED_DIR is set and
// contains <name>.json, that file overrides the built-in preset.
ScenarioConfig preset(const std::string& name);

std::vector<std::string> preset_names();

}  // namespace pgame::tools
