#include "pgame/simulator.hpp"

#include <cmath>
#include <sstream>

namespace pgame {

namespace {

struct RunContext {
  const ScenarioConfig& cfg;
  StageLabel stage = StageLabel::PreGame;
  bool aligned = false;  // full-information alignment latch (|theta| pinned)

  ControlPair controls(const GameState& s) const {
    switch (stage) {
      case StageLabel::PreGame:
        return {0.0, 0.0};
      case StageLabel::PartialInfo:
        return {0.0, sign(s.theta)};
      case StageLabel::FullInfo:
        if (aligned) return {0.0, 0.0};  // radial descent, theta held
        return {sign(s.theta) * std::asin(cfg.nu / s.R), sign(s.theta)};
      case StageLabel::Escape:
        return {kPi, 0.0};
    }
    return {0.0, 0.0};
  }
};

TrajectorySample make_sample(const GameState& s, StageLabel stage,
                             const ControlPair& c) {
  auto [attacker, defender] = to_cartesian(s);
  return {s.t,      stage,    s.R, s.theta, s.beta, attacker, defender,
          c.alpha, c.u, separation_distance(s.R, s.theta)};
}

}  // namespace

Trajectory run_scenario(const ScenarioConfig& cfg) {
  {
    auto violations = validate(cfg);
    if (!violations.empty()) {
      std::ostringstream msg;
      msg << "invalid scenario:";
      for (const auto& v : violations) msg << " [" << v << "]";
      throw std::invalid_argument(msg.str());
    }
  }

  const double h = cfg.solver.step_size;
  const double etol = cfg.solver.event_tol;
  const double ctol = cfg.solver.capture_tol;
  const double r0 = cfg.tsr_radius;

  Trajectory traj;
  RunContext ctx{cfg};
  GameState s = initial_state(cfg);

  auto visit = [&](StageLabel st, double t) {
    ctx.stage = st;
    traj.outcome.stages_visited.push_back({st, t});
  };
  auto event = [&](double t, const char* label) {
    traj.events.push_back({t, label});
  };
  auto record = [&](const GameState& x) {
    traj.samples.push_back(make_sample(x, ctx.stage, ctx.controls(x)));
  };

  auto finish = [&](Verdict v, const GameState& x, const char* label) {
    traj.outcome.verdict = v;
    traj.outcome.terminal_state = x;
    event(x.t, label);
    record(x);
  };

  auto enter_full_info = [&](const GameState& x) {
    visit(StageLabel::FullInfo, x.t);
    traj.outcome.classification_at_full_info = classify_region(x, cfg.nu);
    if (std::abs(x.theta) <= ctol) ctx.aligned = true;
  };

  // Initial stage.
  if (cfg.perception_mode == PerceptionMode::Unconstrained) {
    enter_full_info(s);
    if (s.R <= 1.0) {
      finish(std::abs(s.theta) <= ctol ? Verdict::DefenderCapture
                                       : Verdict::AttackerBreach,
             s, std::abs(s.theta) <= ctol ? "capture" : "breach");
      return traj;
    }
  } else {
    visit(StageLabel::PreGame, 0.0);
    for (;;) {
      Transition tr = advance(s, ctx.stage, cfg);
      if (tr == Transition::None) break;
      if (is_terminal(tr)) {
        Verdict v = tr == Transition::TerminalCapture ? Verdict::DefenderCapture
                    : tr == Transition::TerminalBreach ? Verdict::AttackerBreach
                                                       : Verdict::AttackerRepelled;
        finish(v, s, tr == Transition::TerminalCapture ? "capture" : "breach");
        return traj;
      }
      if (tr == Transition::ToPartialInfo) {
        visit(StageLabel::PartialInfo, 0.0);
        event(0.0, "tsr_entry");
      } else if (tr == Transition::ToFullInfo) {
        event(0.0, "asr_detection");
        enter_full_info(s);
      } else if (tr == Transition::ToEscape) {
        visit(StageLabel::Escape, 0.0);
        event(0.0, "escape_begin");
      }
    }
  }
  record(s);

  auto law = [&](const GameState& x) { return ctx.controls(x); };
  const double t_max = 1000.0;

  while (s.t < t_max) {
    GameState next = rk4_step(s, law, cfg.nu, h);

    // Events in priority order: terminal first, then theta alignment, then
    // perception transitions, then escape completion.
    if (ctx.stage != StageLabel::Escape && next.R <= 1.0) {
      GameState hit = locate_event(
          s, law, cfg.nu, h, [](const GameState& x) { return x.R - 1.0; }, etol);
      if (std::abs(hit.theta) <= ctol)
        finish(Verdict::DefenderCapture, hit, "capture");
      else
        finish(Verdict::AttackerBreach, hit, "breach");
      return traj;
    }

    if (ctx.stage == StageLabel::PartialInfo && sign(next.theta) != sign(s.theta) &&
        sign(s.theta) != 0.0) {
      // Defender reached alignment while still undetected; the sliding mode
      // resolves to theta pinned at zero. Snap exactly to keep sign() quiet.
      GameState hit = locate_event(
          s, law, cfg.nu, h, [](const GameState& x) { return x.theta; }, etol);
      hit.phi_a -= hit.theta;
      hit.theta = 0.0;
      event(hit.t, "alignment");
      s = hit;
      record(s);
      continue;
    }

    if (ctx.stage == StageLabel::FullInfo && !ctx.aligned &&
        std::abs(next.theta) <= ctol) {
      GameState hit = locate_event(
          s, law, cfg.nu, h,
          [&](const GameState& x) { return std::abs(x.theta) - ctol; }, etol);
      // snap onto the alignment surface so the latched angle carries no
      // localization jitter above the tolerance
      if (std::abs(hit.theta) > ctol) {
        double snapped = sign(hit.theta) * ctol;
        hit.phi_a += snapped - hit.theta;
        hit.theta = snapped;
      }
      event(hit.t, "alignment");
      if (cfg.perception_mode == PerceptionMode::Constrained &&
          classify_region(hit, cfg.nu) == RegionLabel::DefenderWin) {
        s = hit;
        record(s);
        visit(StageLabel::Escape, s.t);
        event(s.t, "escape_begin");
        record(s);
      } else {
        ctx.aligned = true;
        s = hit;
        record(s);
      }
      continue;
    }

    if (ctx.stage == StageLabel::PreGame && next.R <= r0) {
      GameState hit = locate_event(
          s, law, cfg.nu, h, [&](const GameState& x) { return x.R - r0; }, etol);
      s = hit;
      record(s);
      visit(StageLabel::PartialInfo, s.t);
      event(s.t, "tsr_entry");
      record(s);
      continue;
    }

    if (ctx.stage == StageLabel::PartialInfo &&
        separation_distance(next.R, next.theta) <= cfg.asr_radius) {
      GameState hit = locate_event(
          s, law, cfg.nu, h,
          [&](const GameState& x) {
            return separation_distance(x.R, x.theta) - cfg.asr_radius;
          },
          etol);
      s = hit;
      record(s);
      event(s.t, "asr_detection");
      enter_full_info(s);
      if (advance(s, ctx.stage, cfg) == Transition::ToEscape) {
        visit(StageLabel::Escape, s.t);
        event(s.t, "escape_begin");
      }
      record(s);
      continue;
    }

    if (ctx.stage == StageLabel::Escape && next.R >= r0) {
      GameState hit = locate_event(
          s, law, cfg.nu, h, [&](const GameState& x) { return x.R - r0; }, etol);
      finish(Verdict::AttackerRepelled, hit, "repelled");
      return traj;
    }

    s = next;
    if (s.R < 1.0 - 10.0 * etol) {
      std::ostringstream msg;
      msg << "missed terminal event: R=" << s.R << " at t=" << s.t;
      throw std::runtime_error(msg.str());
    }
    record(s);
  }
  throw std::runtime_error("run_scenario: time budget exhausted without termination");
}

}  // namespace pgame
