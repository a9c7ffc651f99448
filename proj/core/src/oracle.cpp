#include "pgame/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "pgame/simulator.hpp"

namespace pgame {

namespace {

// Reflect an angle into [0, pi] (theta lives on a circle; |theta| folds at 0
// and at pi).
double fold(double th) {
  th = std::abs(th);
  if (th > kPi) th = 2.0 * kPi - th;
  return std::clamp(th, 0.0, kPi);
}

struct Lattice {
  int n_r, n_th;
  double r_max;
  double dr, dth;

  double bilinear(const std::vector<double>& v, double R, double th) const {
    double x = (R - 1.0) / dr;
    double y = th / dth;
    int i = std::clamp(static_cast<int>(std::floor(x)), 0, n_r - 1);
    int j = std::clamp(static_cast<int>(std::floor(y)), 0, n_th - 1);
    double fx = std::clamp(x - i, 0.0, 1.0);
    double fy = std::clamp(y - j, 0.0, 1.0);
    auto at = [&](int a, int b) { return v[a * (n_th + 1) + b]; };
    return (1 - fx) * ((1 - fy) * at(i, j) + fy * at(i, j + 1)) +
           fx * ((1 - fy) * at(i + 1, j) + fy * at(i + 1, j + 1));
  }
};

}  // namespace

WinnerMap discrete_winner_map(double nu, double r_max, const GridSpec& grid) {
  WinnerMap map;
  map.grid = grid;
  map.nu = nu;
  map.r_max = r_max;

  const int n_r = grid.n_r, n_th = grid.n_theta;
  Lattice lat{n_r, n_th, r_max, (r_max - 1.0) / n_r, kPi / n_th};
  const double theta_win = lat.dth;  // breach margin at grid resolution
  const double h = grid.h_oracle;

  std::vector<double> v((n_r + 1) * (n_th + 1), 0.5);
  for (int j = 0; j <= n_th; ++j)
    v[j] = map.theta_at(j) > theta_win ? 1.0 : 0.0;  // terminal row R = 1

  struct AlphaStep {
    double cos_a, sin_a;
  };
  std::vector<AlphaStep> alphas(grid.n_alpha);
  for (int k = 0; k < grid.n_alpha; ++k) {
    double a = -kPi / 2.0 + kPi * (k + 1) / (grid.n_alpha + 1);
    alphas[k] = {std::cos(a), std::sin(a)};
  }
  const double us[3] = {-1.0, 0.0, 1.0};

  auto next_value = [&](double R, double th, const AlphaStep& a, double u) {
    double rn = R - h * nu * a.cos_a;
    double tn = th + h * (nu / R * a.sin_a - u);
    if (rn <= 1.0) {
      double frac = (R - 1.0) / (R - rn);
      double tc = fold(th + frac * (tn - th));
      return tc > theta_win ? 1.0 : 0.0;
    }
    return lat.bilinear(v, std::min(rn, r_max), fold(tn));
  };

  for (int sweep = 0; sweep < grid.horizon; ++sweep) {
    double max_change = 0.0;
    for (int i = 1; i <= n_r; ++i) {
      double R = map.r_at(i);
      for (int j = 0; j <= n_th; ++j) {
        double th = lat.dth * j;
        double best_a = 0.0;
        for (const AlphaStep& a : alphas) {
          double worst_u = 1.0;
          for (double u : us) worst_u = std::min(worst_u, next_value(R, th, a, u));
          best_a = std::max(best_a, worst_u);
        }
        double& cell = v[i * (n_th + 1) + j];
        max_change = std::max(max_change, std::abs(best_a - cell));
        cell = best_a;
      }
    }
    if (max_change < 1e-10) break;
  }

  map.values = v;
  map.cells.resize(v.size());
  for (size_t k = 0; k < v.size(); ++k) {
    map.cells[k] = v[k] > 0.6   ? CellLabel::AttackerWin
                   : v[k] < 0.4 ? CellLabel::DefenderWin
                                : CellLabel::Unknown;
  }
  return map;
}

AgreementReport compare_with_barrier(const WinnerMap& map) {
  AgreementReport rep;
  const int n_r = map.grid.n_r, n_th = map.grid.n_theta;
  const double dr = (map.r_max - 1.0) / n_r, dth = kPi / n_th;
  for (int i = 1; i <= n_r; ++i) {
    double R = map.r_at(i);
    double tg = theta_G(R, map.nu);
    double slope = std::sqrt(std::max(R * R - map.nu * map.nu, 0.0)) / (map.nu * R);
    double band = dth + slope * dr;
    for (int j = 0; j <= n_th; ++j) {
      double th = map.theta_at(j);
      if (std::abs(th - tg) <= band) {
        ++rep.excluded;
        continue;
      }
      ++rep.total;
      CellLabel expect = th <= tg ? CellLabel::DefenderWin : CellLabel::AttackerWin;
      CellLabel got = map.label(i, j);
      if (got == CellLabel::Unknown)
        ++rep.unknown;
      else if (got == expect)
        ++rep.agree;
    }
  }
  rep.rate = rep.total > 0 ? static_cast<double>(rep.agree) / rep.total : 0.0;
  return rep;
}

namespace {

// Integrate a control law until R crosses 1; returns |theta| there, or
// nullopt if the horizon runs out first.
template <typename Law>
std::optional<double> terminal_abs_theta(GameState s, Law&& law,
                                         const ScenarioConfig& cfg,
                                         double horizon) {
  const double h = cfg.solver.step_size;
  while (s.t < horizon) {
    GameState next = rk4_step(s, law, cfg.nu, h);
    if (next.R <= 1.0) {
      GameState hit = locate_event(
          s, law, cfg.nu, h, [](const GameState& x) { return x.R - 1.0; },
          cfg.solver.event_tol);
      return std::abs(hit.theta);
    }
    s = next;
  }
  return std::nullopt;
}

template <typename Law>
std::optional<double> time_to_radius(GameState s, Law&& law,
                                     const ScenarioConfig& cfg, double r_goal,
                                     double horizon) {
  const double h = cfg.solver.step_size;
  while (s.t < horizon) {
    GameState next = rk4_step(s, law, cfg.nu, h);
    if (next.R >= r_goal) {
      GameState hit = locate_event(
          s, law, cfg.nu, h,
          [&](const GameState& x) { return x.R - r_goal; }, cfg.solver.event_tol);
      return hit.t;
    }
    if (next.R <= s.R + 1e-15) return std::nullopt;  // not making progress
    s = next;
  }
  return std::nullopt;
}

ControlPair equilibrium_full_info(const GameState& x, double nu) {
  double sg = std::abs(x.theta) < 1e-12 ? 0.0 : sign(x.theta);
  return {sg * std::asin(nu / x.R), sg};
}

}  // namespace

DeviationReport attacker_deviation_test(const GameState& state,
                                        const ScenarioConfig& cfg,
                                        int n_deviations, double horizon,
                                        double tolerance) {
  DeviationReport rep;
  rep.n_deviations = n_deviations;
  auto star_law = [&](const GameState& x) { return equilibrium_full_info(x, cfg.nu); };
  double obj_star = terminal_abs_theta(state, star_law, cfg, horizon).value_or(0.0);
  rep.best_improvement = -1e300;
  for (int k = 0; k < n_deviations; ++k) {
    double a = -kPi / 2.0 + kPi * (k + 1) / (n_deviations + 1);
    auto law = [&](const GameState& x) {
      return ControlPair{a, std::abs(x.theta) < 1e-12 ? 0.0 : sign(x.theta)};
    };
    auto obj = terminal_abs_theta(state, law, cfg, horizon);
    if (!obj) continue;  // never reached the target: no breach, no gain
    ++rep.evaluated;
    double gain = *obj - obj_star;
    if (gain > rep.best_improvement) {
      rep.best_improvement = gain;
      rep.best_control = a;
    }
  }
  rep.dominated = rep.best_improvement > tolerance;
  return rep;
}

DeviationReport defender_deviation_test(const GameState& state,
                                        const ScenarioConfig& cfg,
                                        int n_deviations, double horizon,
                                        double tolerance) {
  DeviationReport rep;
  rep.n_deviations = n_deviations;
  auto star_law = [&](const GameState& x) { return equilibrium_full_info(x, cfg.nu); };
  double obj_star = terminal_abs_theta(state, star_law, cfg, horizon).value_or(kPi);
  rep.best_improvement = -1e300;
  for (int k = 0; k < n_deviations; ++k) {
    double u = n_deviations == 1 ? 0.0 : -1.0 + 2.0 * k / (n_deviations - 1);
    auto law = [&](const GameState& x) {
      auto c = equilibrium_full_info(x, cfg.nu);
      return ControlPair{c.alpha, u};
    };
    auto obj = terminal_abs_theta(state, law, cfg, horizon);
    double val = obj.value_or(kPi);  // never-terminating is no help to the defender
    ++rep.evaluated;
    double gain = obj_star - val;
    if (gain > rep.best_improvement) {
      rep.best_improvement = gain;
      rep.best_control = u;
    }
  }
  rep.dominated = rep.best_improvement > tolerance;
  return rep;
}

DeviationReport escape_deviation_test(const GameState& state,
                                      const ScenarioConfig& cfg,
                                      int n_deviations, double horizon,
                                      double tolerance) {
  DeviationReport rep;
  rep.n_deviations = n_deviations;
  auto tracking_law = [&](double a) {
    return [a, &cfg](const GameState& x) {
      return ControlPair{a, cfg.nu / x.R * std::sin(a)};
    };
  };
  double t_star =
      time_to_radius(state, tracking_law(kPi), cfg, cfg.tsr_radius, horizon)
          .value_or(horizon);
  rep.best_improvement = -1e300;
  for (int k = 0; k < n_deviations; ++k) {
    double a = n_deviations == 1 ? kPi
                                 : kPi / 2.0 + kPi * k / (n_deviations - 1);
    auto t_dev = time_to_radius(state, tracking_law(a), cfg, cfg.tsr_radius, horizon);
    if (!t_dev) continue;
    ++rep.evaluated;
    double gain = t_star - *t_dev;  // positive if the deviation exits sooner
    if (gain > rep.best_improvement) {
      rep.best_improvement = gain;
      rep.best_control = a;
    }
  }
  rep.dominated = rep.best_improvement > tolerance;
  return rep;
}

}  // namespace pgame
