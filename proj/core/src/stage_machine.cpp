#include "pgame/stage_machine.hpp"

#include <cmath>
#include <stdexcept>

namespace pgame {

bool is_terminal(Transition t) {
  return t == Transition::TerminalBreach || t == Transition::TerminalCapture ||
         t == Transition::TerminalRepelled;
}

bool defender_sees(const GameState& state, const ScenarioConfig& config) {
  if (config.perception_mode == PerceptionMode::Unconstrained) return true;
  return state.R <= config.tsr_radius;
}

bool attacker_sees(const GameState& state, const ScenarioConfig& config, bool sticky) {
  if (config.perception_mode == PerceptionMode::Unconstrained) return true;
  if (sticky) return true;
  return separation_distance(state.R, state.theta) <= config.asr_radius;
}

Transition advance(const GameState& state, StageLabel stage,
                   const ScenarioConfig& config) {
  // Terminal events first: a breach and a stage transition in the same
  // instant resolve to the game-ending event.
  if (stage != StageLabel::Escape && state.R <= 1.0) {
    return std::abs(state.theta) <= config.solver.capture_tol
               ? Transition::TerminalCapture
               : Transition::TerminalBreach;
  }
  switch (stage) {
    case StageLabel::PreGame:
      if (state.R <= config.tsr_radius) return Transition::ToPartialInfo;
      return Transition::None;
    case StageLabel::PartialInfo:
      if (attacker_sees(state, config, false)) return Transition::ToFullInfo;
      return Transition::None;
    case StageLabel::FullInfo: {
      if (config.perception_mode == PerceptionMode::Unconstrained)
        return Transition::None;  // the reference game has no escape stage
      if (config.escape_policy == EscapePolicy::SurrenderOnClassification &&
          classify_region(state, config.nu) == RegionLabel::DefenderWin)
        return Transition::ToEscape;
      if (std::abs(state.theta) <= config.solver.capture_tol && state.R > 1.0 &&
          classify_region(state, config.nu) == RegionLabel::DefenderWin)
        return Transition::ToEscape;
      return Transition::None;
    }
    case StageLabel::Escape:
      if (state.R >= config.tsr_radius) return Transition::TerminalRepelled;
      return Transition::None;
  }
  throw std::logic_error("advance: inconsistent (state, stage) pair");
}

const char* to_string(StageLabel s) {
  switch (s) {
    case StageLabel::PreGame: return "PreGame";
    case StageLabel::PartialInfo: return "PartialInfo";
    case StageLabel::FullInfo: return "FullInfo";
    case StageLabel::Escape: return "Escape";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::AttackerBreach: return "AttackerBreach";
    case Verdict::DefenderCapture: return "DefenderCapture";
    case Verdict::AttackerRepelled: return "AttackerRepelled";
  }
  return "?";
}

const char* to_string(RegionLabel r) {
  switch (r) {
    case RegionLabel::DefenderWin: return "DefenderWin";
    case RegionLabel::AttackerWin: return "AttackerWin";
  }
  return "?";
}

}  // namespace pgame
