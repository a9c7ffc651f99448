#include "pgame/core.hpp"

#include <algorithm>
#include <cmath>

namespace pgame {

double wrap_angle(double x) {
  double y = std::fmod(x, 2.0 * kPi);
  if (y <= -kPi) y += 2.0 * kPi;
  if (y > kPi) y -= 2.0 * kPi;
  return y;
}

double separation_distance(double R, double theta) {
  double p2 = R * R + 1.0 - 2.0 * R * std::cos(theta);
  return std::sqrt(std::max(p2, 0.0));
}

std::optional<double> theta_p(double R, double r_a) {
  if (r_a <= 0.0) return std::nullopt;
  if (R < 1.0 || R > 1.0 + r_a) return std::nullopt;
  double c = (R * R + 1.0 - r_a * r_a) / (2.0 * R);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

std::pair<Vec2, Vec2> to_cartesian(const GameState& state) {
  Vec2 attacker{state.R * std::cos(state.phi_a), state.R * std::sin(state.phi_a)};
  Vec2 defender{std::cos(state.beta), std::sin(state.beta)};
  return {attacker, defender};
}

std::vector<std::string> validate(const ScenarioConfig& c) {
  std::vector<std::string> v;
  if (!(c.nu > 0.0 && c.nu <= 1.0))
    v.push_back("assumption 1: speed ratio nu must lie in (0, 1]");
  if (!(norm(c.attacker_start) >= 1.0))
    v.push_back("assumption 3: attacker must start outside the target (|attacker_start| >= 1)");
  if (!(c.tsr_radius > 1.0))
    v.push_back("tsr_radius must exceed the target radius (R0 > 1)");
  if (!(c.asr_radius > 0.0 &&
        c.asr_radius <= std::min(c.tsr_radius - 1.0, 1.0)))
    v.push_back("assumption 4: asr_radius must lie in (0, min{R0 - 1, 1}]");
  if (!(c.defender_start_angle > -kPi && c.defender_start_angle <= kPi))
    v.push_back("defender_start_angle must lie in (-pi, pi]");
  double theta0 = wrap_angle(std::atan2(c.attacker_start.y, c.attacker_start.x) -
                             c.defender_start_angle);
  if (!(std::abs(theta0) < kPi))
    v.push_back("assumption 2: initial separation angle must satisfy |theta0| < pi");
  if (!(c.solver.step_size > 0.0)) v.push_back("solver.step_size must be positive");
  if (!(c.solver.capture_tol > 0.0)) v.push_back("solver.capture_tol must be positive");
  if (!(c.solver.event_tol > 0.0)) v.push_back("solver.event_tol must be positive");
  return v;
}

GameState initial_state(const ScenarioConfig& c) {
  GameState s;
  s.t = 0.0;
  s.R = norm(c.attacker_start);
  s.phi_a = std::atan2(c.attacker_start.y, c.attacker_start.x);
  s.beta = c.defender_start_angle;
  s.theta = wrap_angle(s.phi_a - s.beta);
  return s;
}

}  // namespace pgame
