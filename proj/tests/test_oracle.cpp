#include <cmath>

#include <doctest.h>

#include "pgame/oracle.hpp"

using namespace pgame;

namespace {

GridSpec coarse_grid() {
  GridSpec g;
  g.n_r = 80;
  g.n_theta = 80;
  g.n_alpha = 9;
  g.h_oracle = 0.01;
  g.horizon = 2000;
  return g;
}

}  // namespace

TEST_CASE("discrete winner map recovers both regions") {
  WinnerMap map = discrete_winner_map(0.5, 1.8, coarse_grid());

  // terminal row: breach wins away from alignment
  CHECK(map.label(0, 0) == CellLabel::DefenderWin);
  CHECK(map.label(0, map.grid.n_theta) == CellLabel::AttackerWin);

  // deep interior of each closed-form region (R = 1.4, theta_G = 0.725)
  int i = 40;  // R = 1.4
  CHECK(map.r_at(i) == doctest::Approx(1.4).epsilon(1e-12));
  CHECK(map.label(i, 5) == CellLabel::DefenderWin);   // theta = 0.196
  CHECK(map.label(i, 76) == CellLabel::AttackerWin);  // theta = 2.985

  AgreementReport rep = compare_with_barrier(map);
  CHECK(rep.total > 4000);
  CHECK(rep.rate >= 0.95);
}

TEST_CASE("winner map values are proper probabilities") {
  WinnerMap map = discrete_winner_map(0.5, 1.8, coarse_grid());
  for (double v : map.values) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("constant attacker headings cannot beat the equilibrium spiral") {
  ScenarioConfig cfg;
  cfg.nu = 0.5;
  cfg.tsr_radius = 1.8;
  GameState s;
  s.R = 1.5;
  s.theta = theta_G(1.5, 0.5) + 0.2;
  auto rep = attacker_deviation_test(s, cfg, 32, 10.0);
  CHECK(rep.evaluated > 0);
  CHECK_FALSE(rep.dominated);
}

TEST_CASE("constant defender speeds cannot beat full-speed pursuit") {
  ScenarioConfig cfg;
  cfg.nu = 0.5;
  cfg.tsr_radius = 1.8;
  GameState s;
  s.R = 1.5;
  s.theta = theta_G(1.5, 0.5) + 0.2;
  auto rep = defender_deviation_test(s, cfg, 9, 10.0);
  CHECK(rep.evaluated == 9);
  // u = +1 = sign(theta) is in the deviation set, so the best gain is ~zero
  CHECK(rep.best_improvement >= -1e-9);
  CHECK_FALSE(rep.dominated);
}

TEST_CASE("deviation tests are mirror symmetric in theta") {
  ScenarioConfig cfg;
  cfg.nu = 0.5;
  cfg.tsr_radius = 1.8;
  GameState plus, minus;
  plus.R = minus.R = 1.4;
  plus.theta = theta_G(1.4, 0.5) + 0.3;
  minus.theta = -plus.theta;
  auto rp = attacker_deviation_test(plus, cfg, 15, 10.0);
  auto rm = attacker_deviation_test(minus, cfg, 15, 10.0);
  CHECK(rp.best_improvement == doctest::Approx(rm.best_improvement).epsilon(1e-9));
  CHECK(std::abs(rp.best_control) ==
        doctest::Approx(std::abs(rm.best_control)).epsilon(1e-12));
}

TEST_CASE("retreating straight out is the fastest escape") {
  ScenarioConfig cfg;
  cfg.nu = 0.5;
  cfg.tsr_radius = 1.8;
  GameState s;
  s.R = 1.2;
  auto rep = escape_deviation_test(s, cfg, 33, 10.0);
  CHECK(rep.evaluated > 0);
  // alpha = pi sits in the deviation set: best gain is exactly zero
  CHECK(rep.best_improvement >= -1e-12);
  CHECK_FALSE(rep.dominated);
}
