#pragma once

#include <string>

#include "pgame/simulator.hpp"

namespace pgame::tools {

// Exit codes: 0 success, 1 runtime failure, 2 configuration error,
// 3 verification failure.

int cmd_run(const std::string& scenario_path, const std::string& output_dir);
int cmd_figures(const std::string& name, const std::string& output_dir);
int cmd_sweep(const std::string& scenario_path, const std::string& param,
              double lo, double hi, int n, const std::string& output_dir);
int cmd_verify(const std::string& output_dir);
int cmd_barrier_table(double nu, double r0, double r_a, int n,
                      const std::string& output_path);

// Shared with tests: serialize a run deterministically.
std::string trajectory_csv(const Trajectory& traj);
std::string outcome_json(const Trajectory& traj, const ScenarioConfig& config);
void write_run_outputs(const ScenarioConfig& config, const Trajectory& traj,
                       const std::string& output_dir);

}  // namespace pgame::tools
