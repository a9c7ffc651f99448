#pragma once

#include <string>

#include "pgame/simulator.hpp"

namespace pgame::tools {

// Deterministic SVG rendering of a run: target circle, TSR circle, ASR
// circle at the detection instant, stage-colored trajectories, and labeled
// special points.
std::string render_svg(const Trajectory& traj, const ScenarioConfig& config);

}  // namespace pgame::tools
