#include <cmath>

#include <doctest.h>

#include "pgame/stage_machine.hpp"

using namespace pgame;

namespace {
GameState at(double R, double theta) {
  GameState s;
  s.R = R;
  s.theta = theta;
  s.beta = 0.0;
  s.phi_a = theta;
  return s;
}
}  // namespace

TEST_CASE("defender perception is the TSR boundary") {
  ScenarioConfig cfg;  // R0 = 1.2
  CHECK_FALSE(defender_sees(at(1.5, 0.3), cfg));
  CHECK(defender_sees(at(1.2, 0.3), cfg));  // boundary counts as inside
  CHECK(defender_sees(at(1.05, 0.3), cfg));
  cfg.perception_mode = PerceptionMode::Unconstrained;
  CHECK(defender_sees(at(5.0, 0.3), cfg));
}

TEST_CASE("attacker perception is the ASR boundary, sticky after detection") {
  ScenarioConfig cfg;  // rA = 0.15
  CHECK_FALSE(attacker_sees(at(1.1, kPi / 2.0), cfg, false));
  double tp = *theta_p(1.1, 0.15);
  CHECK(attacker_sees(at(1.1, tp), cfg, false));  // p == rA exactly
  CHECK(attacker_sees(at(1.1, tp - 0.01), cfg, false));
  CHECK(attacker_sees(at(1.1, kPi / 2.0), cfg, true));  // sticky
  cfg.perception_mode = PerceptionMode::Unconstrained;
  CHECK(attacker_sees(at(3.0, kPi / 2.0), cfg, false));
}

TEST_CASE("advance: stage transitions fire on closed boundaries") {
  ScenarioConfig cfg;  // nu=0.5, R0=1.2, rA=0.15
  CHECK(advance(at(1.5, 0.4), StageLabel::PreGame, cfg) == Transition::None);
  CHECK(advance(at(1.2, 0.4), StageLabel::PreGame, cfg) == Transition::ToPartialInfo);
  CHECK(advance(at(1.15, 0.4), StageLabel::PartialInfo, cfg) == Transition::None);
  double tp = *theta_p(1.1, 0.15);
  CHECK(advance(at(1.1, tp), StageLabel::PartialInfo, cfg) == Transition::ToFullInfo);
}

TEST_CASE("advance: terminal events outrank stage transitions") {
  ScenarioConfig cfg;
  CHECK(advance(at(1.0, 0.4), StageLabel::PartialInfo, cfg) ==
        Transition::TerminalBreach);
  CHECK(advance(at(1.0, 0.4), StageLabel::PreGame, cfg) ==
        Transition::TerminalBreach);
  CHECK(advance(at(1.0, 0.5 * cfg.solver.capture_tol), StageLabel::FullInfo, cfg) ==
        Transition::TerminalCapture);
}

TEST_CASE("advance: full information to escape") {
  ScenarioConfig cfg;
  cfg.nu = 0.5;

  // default policy: escape begins only at alignment, and only when the
  // state is a defender win (otherwise alignment is transient)
  GameState s = at(1.5, 0.5 * cfg.solver.capture_tol);
  CHECK(advance(s, StageLabel::FullInfo, cfg) == Transition::ToEscape);
  s = at(1.5, 0.3);
  CHECK(advance(s, StageLabel::FullInfo, cfg) == Transition::None);

  // surrender-on-classification concedes anywhere in the defender's region
  cfg.escape_policy = EscapePolicy::SurrenderOnClassification;
  CHECK(advance(s, StageLabel::FullInfo, cfg) == Transition::ToEscape);
  s = at(1.05, 1.0);  // attacker-win state: play on
  CHECK(advance(s, StageLabel::FullInfo, cfg) == Transition::None);

  // the unconstrained reference game never escapes
  cfg.perception_mode = PerceptionMode::Unconstrained;
  s = at(1.5, 0.5 * cfg.solver.capture_tol);
  CHECK(advance(s, StageLabel::FullInfo, cfg) == Transition::None);
}

TEST_CASE("advance: escape terminates at the TSR edge") {
  ScenarioConfig cfg;  // R0 = 1.2
  CHECK(advance(at(1.15, 0.0), StageLabel::Escape, cfg) == Transition::None);
  CHECK(advance(at(1.2, 0.0), StageLabel::Escape, cfg) ==
        Transition::TerminalRepelled);
}

TEST_CASE("string labels") {
  CHECK(std::string(to_string(StageLabel::PreGame)) == "PreGame");
  CHECK(std::string(to_string(StageLabel::Escape)) == "Escape");
  CHECK(std::string(to_string(Verdict::AttackerBreach)) == "AttackerBreach");
  CHECK(std::string(to_string(Verdict::AttackerRepelled)) == "AttackerRepelled");
  CHECK(std::string(to_string(RegionLabel::DefenderWin)) == "DefenderWin");
}
