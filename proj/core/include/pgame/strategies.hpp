#pragma once

#include "pgame/core.hpp"

namespace pgame {

enum class RegionLabel { DefenderWin, AttackerWin };

// Either a heading command or the decision to concede the attack.
struct AttackerDecision {
  bool stop_attacking = false;
  double alpha = 0.0;

  static AttackerDecision steer(double a) { return {false, a}; }
  static AttackerDecision stop() { return {true, 0.0}; }
};

// g(R) = sqrt(R^2/nu^2 - 1) + arcsin(nu/R), defined for R >= nu.
double g(double R, double nu);

// Barrier curve theta_G(R) = g(R) - g(1); strictly increasing, theta_G(1) = 0.
double theta_G(double R, double nu);

// Defender win iff |theta| <= theta_G(R); ties on the barrier go to the defender.
RegionLabel classify_region(const GameState& state, double nu);

// theta_c(R) = (R - 1)/nu.
double critical_theta(double R, double nu);

// Straight-line (R, theta) trajectory of partial-information equilibrium
// play (alpha = 0, u = sign(theta)); theta saturates at 0 once aligned.
double partial_flow_line(double R, double R_entry, double theta_entry, double nu);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Theta0 range (symmetric about zero) for which the full-information stage
// occurs under partial-information equilibrium play.
Interval full_info_existence_interval(double L0, double nu, double r_a);

// Equilibrium defender command per stage: stationary before the game and
// during escape, full-speed pursuit sign(theta) otherwise.
double defender_control(double theta, StageLabel stage);

// Equilibrium attacker decision per stage. During full information the
// attacker steers sign(theta)*arcsin(nu/R) while a win is still possible and
// concedes per the configured escape policy otherwise.
AttackerDecision attacker_control(const GameState& state, StageLabel stage,
                                  const ScenarioConfig& config);

}  // namespace pgame
