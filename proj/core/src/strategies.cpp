#include "pgame/strategies.hpp"

#include <cmath>
#include <stdexcept>

namespace pgame {

double g(double R, double nu) {
  if (R < nu) throw std::invalid_argument("g(R): requires R >= nu");
  double q = R * R / (nu * nu) - 1.0;
  return std::sqrt(std::max(q, 0.0)) + std::asin(nu / R);
}

double theta_G(double R, double nu) {
  if (R < 1.0) throw std::invalid_argument("theta_G: requires R >= 1");
  return g(R, nu) - g(1.0, nu);
}

RegionLabel classify_region(const GameState& state, double nu) {
  return std::abs(state.theta) <= theta_G(state.R, nu) ? RegionLabel::DefenderWin
                                                       : RegionLabel::AttackerWin;
}

double critical_theta(double R, double nu) { return (R - 1.0) / nu; }

double partial_flow_line(double R, double R_entry, double theta_entry, double nu) {
  double s = sign(theta_entry);
  double mag = std::abs(theta_entry) - (R_entry - R) / nu;
  return s * std::max(mag, 0.0);
}

Interval full_info_existence_interval(double L0, double nu, double r_a) {
  double hi = (L0 - 1.0) / nu + std::acos(1.0 - r_a * r_a / 2.0);
  return {-hi, hi};
}

double defender_control(double theta, StageLabel stage) {
  switch (stage) {
    case StageLabel::PreGame:
    case StageLabel::Escape:
      return 0.0;
    case StageLabel::PartialInfo:
    case StageLabel::FullInfo:
      return sign(theta);
  }
  return 0.0;
}

AttackerDecision attacker_control(const GameState& state, StageLabel stage,
                                  const ScenarioConfig& config) {
  switch (stage) {
    case StageLabel::PreGame:
    case StageLabel::PartialInfo:
      return AttackerDecision::steer(0.0);
    case StageLabel::Escape:
      return AttackerDecision::steer(kPi);
    case StageLabel::FullInfo:
      break;
  }
  if (config.nu / state.R > 1.0)
    throw std::runtime_error("attacker_control: nu/R > 1, state violates invariants");

  bool aligned = std::abs(state.theta) <= config.solver.capture_tol;
  if (config.perception_mode == PerceptionMode::Unconstrained) {
    // Reference full-information game: the attacker never concedes; after
    // alignment the sliding mode resolves to a radial descent.
    if (aligned) return AttackerDecision::steer(0.0);
    return AttackerDecision::steer(sign(state.theta) *
                                   std::asin(config.nu / state.R));
  }
  if (classify_region(state, config.nu) == RegionLabel::DefenderWin) {
    if (config.escape_policy == EscapePolicy::SurrenderOnClassification || aligned)
      return AttackerDecision::stop();
  }
  if (aligned) return AttackerDecision::steer(0.0);
  return AttackerDecision::steer(sign(state.theta) * std::asin(config.nu / state.R));
}

}  // namespace pgame
