#include <benchmark/benchmark.h>

#include "pgame/oracle.hpp"
#include "pgame/simulator.hpp"

using namespace pgame;

static void BM_ThetaG(benchmark::State& state) {
  double r = 1.0;
  for (auto _ : state) {
    r += 1e-9;
    benchmark::DoNotOptimize(theta_G(r, 0.5));
  }
}
BENCHMARK(BM_ThetaG);

static void BM_Rk4FullInfoStep(benchmark::State& state) {
  GameState s;
  s.R = 1.5;
  s.theta = 1.2;
  auto law = [](const GameState& x) {
    return ControlPair{sign(x.theta) * std::asin(0.5 / x.R), sign(x.theta)};
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(s);  // force a fresh read of the input state
    GameState next = rk4_step(s, law, 0.5, 1e-3);
    benchmark::DoNotOptimize(next);
  }
}
BENCHMARK(BM_Rk4FullInfoStep);

static void BM_RunFourStageScenario(benchmark::State& state) {
  ScenarioConfig cfg;  // the detect-and-repel geometry: all four stages
  cfg.nu = 0.5;
  cfg.tsr_radius = 1.8;
  cfg.asr_radius = 0.5;
  cfg.attacker_start = {1.5, 1.5};
  cfg.defender_start_angle = -kPi / 8.0;
  for (auto _ : state) benchmark::DoNotOptimize(run_scenario(cfg));
}
BENCHMARK(BM_RunFourStageScenario)->Unit(benchmark::kMillisecond);

static void BM_WinnerMap(benchmark::State& state) {
  GridSpec grid;
  grid.n_r = static_cast<int>(state.range(0));
  grid.n_theta = static_cast<int>(state.range(0));
  grid.horizon = 2000;
  for (auto _ : state)
    benchmark::DoNotOptimize(discrete_winner_map(0.5, 1.8, grid));
}
BENCHMARK(BM_WinnerMap)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
