#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pgame/core.hpp"
#include "pgame/stage_machine.hpp"
#include "pgame/strategies.hpp"

namespace pgame {

struct TrajectorySample {
  double t;
  StageLabel stage;
  double R, theta, beta;
  Vec2 attacker, defender;
  double alpha, u, p;
};

struct TransitionEvent {
  double t;
  std::string label;  // tsr_entry, asr_detection, alignment, escape_begin, breach, capture, repelled
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  std::vector<TransitionEvent> events;
  Outcome outcome;
};

// Relative dynamics, identical in every stage; the stage only determines
// which controls feed in. Returns d/dt of (R, theta, beta, phi_a).
inline std::array<double, 4> dynamics(const GameState& s, const ControlPair& c,
                                      double nu) {
  double w = nu / s.R * std::sin(c.alpha);  // attacker angular rate
  return {-nu * std::cos(c.alpha), w - c.u, c.u, w};
}

namespace detail {
inline GameState offset(const GameState& s, const std::array<double, 4>& k,
                        double dt) {
  GameState r = s;
  r.t += dt;
  r.R += dt * k[0];
  r.theta += dt * k[1];
  r.beta += dt * k[2];
  r.phi_a += dt * k[3];
  return r;
}
}  // namespace detail

// Classical RK4 update. The state-feedback law is re-evaluated at every
// internal stage point so smooth feedback integrates at full order.
template <typename Law>
GameState rk4_step(const GameState& s, Law&& law, double nu, double h) {
  auto f = [&](const GameState& x) { return dynamics(x, law(x), nu); };
  auto k1 = f(s);
  auto k2 = f(detail::offset(s, k1, h / 2.0));
  auto k3 = f(detail::offset(s, k2, h / 2.0));
  auto k4 = f(detail::offset(s, k3, h));
  GameState r = s;
  r.t += h;
  r.R += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
  r.theta += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
  r.beta += h / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]);
  r.phi_a += h / 6.0 * (k1[3] + 2.0 * k2[3] + 2.0 * k3[3] + k4[3]);
  return r;
}

// Integrate a fixed horizon of n steps with no event handling.
template <typename Law>
GameState integrate_fixed(GameState s, Law&& law, double nu, double h, int n) {
  for (int i = 0; i < n; ++i) s = rk4_step(s, law, nu, h);
  return s;
}

// Bisection on the sub-step length until |f| <= tol, re-integrating partial
// steps from the bracket start. f must change sign across [s0, step(s0, h)]
// (or vanish at the endpoint).
template <typename Law, typename EventFn>
GameState locate_event(const GameState& s0, Law&& law, double nu, double h,
                       EventFn&& f, double tol) {
  double f0 = f(s0);
  GameState s_end = rk4_step(s0, law, nu, h);
  double f1 = f(s_end);
  if (std::abs(f1) <= tol) return s_end;  // event at the step endpoint
  if (f0 * f1 > 0.0)
    throw std::logic_error("locate_event: no sign change across the bracket");
  double lo = 0.0, hi = h;
  GameState best = s_end;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    GameState sm = rk4_step(s0, law, nu, mid);
    double fm = f(sm);
    if (std::abs(fm) <= tol) return sm;
    if (f0 * fm > 0.0) {
      lo = mid;
    } else {
      hi = mid;
      best = sm;
    }
    if (hi - lo < 1e-17) break;
  }
  return best;
}

// Full-run orchestration: stage-dependent equilibrium controls, event
// transitions, every integration step recorded. Deterministic.
Trajectory run_scenario(const ScenarioConfig& config);

}  // namespace pgame
