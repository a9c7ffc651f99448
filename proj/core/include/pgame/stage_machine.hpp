#pragma once

#include <optional>
#include <vector>

#include "pgame/core.hpp"
#include "pgame/strategies.hpp"

namespace pgame {

enum class Verdict { AttackerBreach, DefenderCapture, AttackerRepelled };

struct StageVisit {
  StageLabel stage;
  double entry_time;
};

struct Outcome {
  Verdict verdict;
  GameState terminal_state;
  std::vector<StageVisit> stages_visited;
  std::optional<RegionLabel> classification_at_full_info;
};

// Stage transition (or terminal event) indicated by the current state.
// Terminal events take priority over stage transitions.
enum class Transition {
  None,
  ToPartialInfo,
  ToFullInfo,
  ToEscape,
  TerminalBreach,
  TerminalCapture,
  TerminalRepelled,
};

bool is_terminal(Transition t);

// The defender perceives the attacker inside the TSR.
bool defender_sees(const GameState& state, const ScenarioConfig& config);

// The attacker perceives the defender inside the ASR; once full information
// has begun (sticky), perception persists.
bool attacker_sees(const GameState& state, const ScenarioConfig& config, bool sticky);

// Evaluate the stage machine at a state lying on (or past) an event surface.
// Transitions fire on closed boundaries: R <= R0 enters partial information,
// p <= rA enters full information, R <= 1 terminates.
Transition advance(const GameState& state, StageLabel stage,
                   const ScenarioConfig& config);

const char* to_string(StageLabel s);
const char* to_string(Verdict v);
const char* to_string(RegionLabel r);

}  // namespace pgame
