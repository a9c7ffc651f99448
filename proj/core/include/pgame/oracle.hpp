#pragma once

#include <vector>

#include "pgame/core.hpp"
#include "pgame/strategies.hpp"

namespace pgame {

// Discretization of the (R, theta) state space for the backward-induction
// oracle. Attacker controls are n_alpha headings spread over (-pi/2, pi/2);
// defender controls are {-1, 0, 1}.
struct GridSpec {
  int n_r = 200;      // cells over R in [1, r_max]
  int n_theta = 200;  // cells over theta in [0, pi]
  int n_alpha = 9;
  double h_oracle = 0.01;
  int horizon = 4000;
};

enum class CellLabel { DefenderWin, AttackerWin, Unknown };

struct WinnerMap {
  GridSpec grid;
  double nu = 0.0;
  double r_max = 0.0;
  std::vector<CellLabel> cells;  // (n_r+1) x (n_theta+1) node labels
  std::vector<double> values;    // converged minimax values in [0, 1]

  double r_at(int i) const { return 1.0 + (r_max - 1.0) * i / grid.n_r; }
  double theta_at(int j) const { return kPi * j / grid.n_theta; }
  CellLabel label(int i, int j) const { return cells[i * (grid.n_theta + 1) + j]; }
};

// Backward induction on the discretized zero-sum game: the attacker
// maximizes reaching R = 1 with |theta| > 0, the defender minimizes,
// alternating minimax over the discrete control sets with the shared
// relative dynamics and bilinear interpolation between nodes. Cells the
// horizon cannot classify are reported Unknown, not guessed.
WinnerMap discrete_winner_map(double nu, double r_max, const GridSpec& grid);

struct AgreementReport {
  int total = 0;     // nodes compared (R > 1, outside the barrier band)
  int agree = 0;
  int unknown = 0;   // unclassified nodes outside the band (count as disagree)
  int excluded = 0;  // nodes within one cell-width of the theta_G curve
  double rate = 0.0;
};

// Agreement of the discrete winner map with the closed-form classifier,
// excluding nodes within one cell-width of the barrier curve.
AgreementReport compare_with_barrier(const WinnerMap& map);

struct DeviationReport {
  int n_deviations = 0;
  int evaluated = 0;               // deviations that produced an objective
  double best_improvement = 0.0;   // max objective gain over the analytic law
  double best_control = 0.0;       // deviation achieving it
  bool dominated = false;          // true if any gain exceeds the tolerance
};

// Holds the defender to u* = sign(theta) and sweeps the attacker over
// constant headings; objective is terminal |theta| at R = 1 (maximized).
DeviationReport attacker_deviation_test(const GameState& state,
                                        const ScenarioConfig& config,
                                        int n_deviations, double horizon,
                                        double tolerance = 1e-3);

// Holds the attacker to alpha* and sweeps the defender over constant angular
// speeds in [-1, 1]; objective is terminal |theta| at R = 1 (minimized).
DeviationReport defender_deviation_test(const GameState& state,
                                        const ScenarioConfig& config,
                                        int n_deviations, double horizon,
                                        double tolerance = 1e-3);

// Escape check: defender tracks u = (nu/R) sin(alpha); sweeps constant
// alpha over [pi/2, 3pi/2]; objective is time to reach the TSR edge
// (minimized, alpha* = pi must be undominated).
DeviationReport escape_deviation_test(const GameState& state,
                                      const ScenarioConfig& config,
                                      int n_deviations, double horizon,
                                      double tolerance = 1e-3);

}  // namespace pgame
