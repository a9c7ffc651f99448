#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "pgame/strategies.hpp"

using namespace pgame;

TEST_CASE("g frozen values") {
  CHECK(g(1.0, 1.0) == doctest::Approx(kPi / 2.0).epsilon(1e-14));
  CHECK(g(1.0, 0.5) ==
        doctest::Approx(std::sqrt(3.0) + kPi / 6.0).epsilon(1e-14));
  CHECK(g(1.0, 0.5) == doctest::Approx(2.255649583167176).epsilon(1e-12));
  // g(2, 1) happens to equal g(1, 0.5): sqrt(3) + pi/6
  CHECK(g(2.0, 1.0) == doctest::Approx(2.255649583167176).epsilon(1e-12));
  CHECK_THROWS_AS(g(0.4, 0.5), std::invalid_argument);
}

TEST_CASE("theta_G frozen values") {
  CHECK(theta_G(1.0, 0.5) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(theta_G(1.2, 0.5) == doctest::Approx(0.355868271064494).epsilon(1e-12));
  CHECK(theta_G(2.0, 1.0) == doctest::Approx(0.684853256372280).epsilon(1e-12));
  CHECK(theta_G(1.01, 0.5) == doctest::Approx(0.017349058484116).epsilon(1e-10));
  CHECK(theta_G(1.5, 0.5) == doctest::Approx(0.912614451033136).epsilon(1e-12));
  CHECK_THROWS_AS(theta_G(0.99, 0.5), std::invalid_argument);
}

TEST_CASE("theta_G is strictly increasing in R") {
  for (double nu : {0.2, 0.5, 0.8, 1.0}) {
    double prev = theta_G(1.0, nu);
    for (int i = 1; i <= 10000; ++i) {
      double R = 1.0 + 2.0 * i / 10000.0;
      double cur = theta_G(R, nu);
      CHECK(cur > prev);
      prev = cur;
    }
  }
}

TEST_CASE("theta_G widens as nu shrinks") {
  // a slower attacker needs a larger angular head start
  for (double R : {1.1, 1.5, 2.0}) {
    CHECK(theta_G(R, 0.3) > theta_G(R, 0.5));
    CHECK(theta_G(R, 0.5) > theta_G(R, 0.9));
  }
}

TEST_CASE("region classification with inclusive barrier") {
  GameState s;
  s.R = 1.5;
  s.theta = 0.0;
  CHECK(classify_region(s, 0.5) == RegionLabel::DefenderWin);
  s.theta = theta_G(1.5, 0.5);  // exactly on the barrier: defender's
  CHECK(classify_region(s, 0.5) == RegionLabel::DefenderWin);
  s.theta = theta_G(1.5, 0.5) + 1e-12;
  CHECK(classify_region(s, 0.5) == RegionLabel::AttackerWin);
  s.R = 1.01;
  s.theta = kPi - 0.01;
  CHECK(classify_region(s, 0.5) == RegionLabel::AttackerWin);
}

TEST_CASE("critical theta") {
  CHECK(critical_theta(1.0, 0.5) == doctest::Approx(0.0));
  CHECK(critical_theta(1.2, 0.5) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(critical_theta(1.5, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("partial-information flow line") {
  // |theta| shrinks at rate 1/nu in R and saturates at zero
  CHECK(partial_flow_line(1.1, 1.2, 0.4, 0.5) ==
        doctest::Approx(0.2).epsilon(1e-13));
  CHECK(partial_flow_line(1.1, 1.2, -0.4, 0.5) ==
        doctest::Approx(-0.2).epsilon(1e-13));
  CHECK(partial_flow_line(1.0, 1.2, 0.3, 0.5) == doctest::Approx(0.0));
  CHECK(partial_flow_line(1.2, 1.2, 0.7, 0.5) == doctest::Approx(0.7));
}

TEST_CASE("full-information existence interval, frozen values") {
  Interval i1 = full_info_existence_interval(1.8, 0.5, 0.5);
  CHECK(i1.hi == doctest::Approx(2.105360510284157).epsilon(1e-12));
  CHECK(i1.lo == doctest::Approx(-i1.hi).epsilon(1e-15));
  Interval i2 = full_info_existence_interval(1.2, 0.5, 0.15);
  CHECK(i2.hi == doctest::Approx(0.550140982153433).epsilon(1e-12));
  // acos(1 - rA^2/2) equals theta_p(1, rA)
  CHECK(i2.hi - (1.2 - 1.0) / 0.5 ==
        doctest::Approx(*theta_p(1.0, 0.15)).epsilon(1e-12));
}

TEST_CASE("defender control per stage") {
  CHECK(defender_control(0.3, StageLabel::PreGame) == 0.0);
  CHECK(defender_control(0.3, StageLabel::PartialInfo) == 1.0);
  CHECK(defender_control(-0.3, StageLabel::PartialInfo) == -1.0);
  CHECK(defender_control(0.0, StageLabel::PartialInfo) == 0.0);
  CHECK(defender_control(0.3, StageLabel::FullInfo) == 1.0);
  CHECK(defender_control(0.3, StageLabel::Escape) == 0.0);
}

TEST_CASE("attacker control per stage") {
  ScenarioConfig cfg;
  cfg.nu = 0.5;
  cfg.tsr_radius = 1.8;
  cfg.asr_radius = 0.5;
  GameState s;
  s.R = 2.0;
  s.theta = 0.5;

  auto pre = attacker_control(s, StageLabel::PreGame, cfg);
  CHECK_FALSE(pre.stop_attacking);
  CHECK(pre.alpha == 0.0);

  auto part = attacker_control(s, StageLabel::PartialInfo, cfg);
  CHECK(part.alpha == 0.0);

  auto full = attacker_control(s, StageLabel::FullInfo, cfg);
  CHECK_FALSE(full.stop_attacking);
  CHECK(full.alpha == doctest::Approx(std::asin(0.25)).epsilon(1e-14));
  CHECK(full.alpha == doctest::Approx(0.252680255142079).epsilon(1e-12));

  s.theta = -0.5;
  auto mirrored = attacker_control(s, StageLabel::FullInfo, cfg);
  CHECK(mirrored.alpha == doctest::Approx(-full.alpha).epsilon(1e-15));

  auto esc = attacker_control(s, StageLabel::Escape, cfg);
  CHECK(esc.alpha == doctest::Approx(kPi));
}

TEST_CASE("attacker concedes a lost full-information game") {
  ScenarioConfig cfg;
  cfg.nu = 0.5;
  GameState s;
  s.R = 1.5;
  s.theta = 0.3;  // inside theta_G(1.5, 0.5) = 0.9126: defender win

  // default policy: keep steering until alignment, then stop
  auto keep = attacker_control(s, StageLabel::FullInfo, cfg);
  CHECK_FALSE(keep.stop_attacking);

  s.theta = 0.5 * cfg.solver.capture_tol;
  auto stop = attacker_control(s, StageLabel::FullInfo, cfg);
  CHECK(stop.stop_attacking);

  // surrender-on-classification concedes immediately in the defender's region
  cfg.escape_policy = EscapePolicy::SurrenderOnClassification;
  s.theta = 0.3;
  auto early = attacker_control(s, StageLabel::FullInfo, cfg);
  CHECK(early.stop_attacking);

  // unconstrained reference game: never concede, slide radially once aligned
  cfg.perception_mode = PerceptionMode::Unconstrained;
  s.theta = 0.5 * cfg.solver.capture_tol;
  auto uncon = attacker_control(s, StageLabel::FullInfo, cfg);
  CHECK_FALSE(uncon.stop_attacking);
  CHECK(uncon.alpha == 0.0);
}

TEST_CASE("attacker heading is odd in theta") {
  ScenarioConfig cfg;
  cfg.nu = 0.7;
  cfg.perception_mode = PerceptionMode::Unconstrained;
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> rd(1.05, 2.5), td(0.01, kPi - 0.01);
  for (int i = 0; i < 500; ++i) {
    GameState s;
    s.R = rd(rng);
    s.theta = td(rng);
    auto plus = attacker_control(s, StageLabel::FullInfo, cfg);
    s.theta = -s.theta;
    auto minus = attacker_control(s, StageLabel::FullInfo, cfg);
    CHECK(minus.alpha == doctest::Approx(-plus.alpha).epsilon(1e-15));
  }
}
