#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "pgame/oracle.hpp"
#include "presets.hpp"
#include "scenario_io.hpp"
#include "svg_plot.hpp"

namespace fs = std::filesystem;

namespace pgame::tools {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

}  // namespace

std::string trajectory_csv(const Trajectory& traj) {
  std::ostringstream out;
  out << "t,stage,R,theta,beta,ax,ay,dx,dy,alpha,u,p\n";
  for (const auto& s : traj.samples) {
    out << num(s.t) << ',' << to_string(s.stage) << ',' << num(s.R) << ','
        << num(s.theta) << ',' << num(s.beta) << ',' << num(s.attacker.x) << ','
        << num(s.attacker.y) << ',' << num(s.defender.x) << ','
        << num(s.defender.y) << ',' << num(s.alpha) << ',' << num(s.u) << ','
        << num(s.p) << '\n';
  }
  return out.str();
}

std::string outcome_json(const Trajectory& traj, const ScenarioConfig& cfg) {
  nlohmann::ordered_json doc;
  doc["verdict"] = to_string(traj.outcome.verdict);
  const auto& ts = traj.outcome.terminal_state;
  doc["terminal_state"] = {
      {"t", ts.t}, {"R", ts.R}, {"theta", ts.theta}, {"beta", ts.beta}};
  auto& stages = doc["stages_visited"] = nlohmann::ordered_json::array();
  for (const auto& v : traj.outcome.stages_visited)
    stages.push_back({{"stage", to_string(v.stage)}, {"entry_time", v.entry_time}});
  if (traj.outcome.classification_at_full_info)
    doc["classification_at_full_info"] =
        to_string(*traj.outcome.classification_at_full_info);
  else
    doc["classification_at_full_info"] = nullptr;
  auto& events = doc["events"] = nlohmann::ordered_json::array();
  for (const auto& e : traj.events) events.push_back({{"t", e.t}, {"label", e.label}});
  doc["config"] = scenario_to_json(cfg);
  return doc.dump(2) + "\n";
}

void write_run_outputs(const ScenarioConfig& cfg, const Trajectory& traj,
                       const std::string& output_dir) {
  fs::create_directories(output_dir);
  write_file(fs::path(output_dir) / "trajectory.csv", trajectory_csv(traj));
  write_file(fs::path(output_dir) / "outcome.json", outcome_json(traj, cfg));
  write_file(fs::path(output_dir) / "plot.svg", render_svg(traj, cfg));
}

int cmd_run(const std::string& scenario_path, const std::string& output_dir) {
  ScenarioConfig cfg = load_scenario(scenario_path);
  Trajectory traj = run_scenario(cfg);
  write_run_outputs(cfg, traj, output_dir);
  std::cout << "verdict: " << to_string(traj.outcome.verdict)
            << "  t_f=" << traj.outcome.terminal_state.t << "\n";
  return 0;
}

int cmd_figures(const std::string& name, const std::string& output_dir) {
  ScenarioConfig cfg = preset(name);
  fs::create_directories(output_dir);
  save_scenario(cfg, (fs::path(output_dir) / (name + ".json")).string());
  Trajectory traj = run_scenario(cfg);
  write_run_outputs(cfg, traj, output_dir);
  std::cout << name << ": " << to_string(traj.outcome.verdict) << "\n";
  return 0;
}

int cmd_sweep(const std::string& scenario_path, const std::string& param,
              double lo, double hi, int n, const std::string& output_dir) {
  if (n < 2) throw ConfigError("sweep requires n >= 2");
  if (param != "nu" && param != "rA" && param != "R0" && param != "theta0")
    throw ConfigError("sweep param must be one of nu, rA, R0, theta0");
  ScenarioConfig base = load_scenario(scenario_path);
  double phi_a0 =
      std::atan2(base.attacker_start.y, base.attacker_start.x);

  std::ostringstream csv;
  csv << "index,param,value,verdict,stages,t_f\n";
  for (int i = 0; i < n; ++i) {
    double value = lo + (hi - lo) * i / (n - 1);
    ScenarioConfig cfg = base;
    if (param == "nu")
      cfg.nu = value;
    else if (param == "rA")
      cfg.asr_radius = value;
    else if (param == "R0")
      cfg.tsr_radius = value;
    else
      cfg.defender_start_angle = wrap_angle(phi_a0 - value);
    auto violations = validate(cfg);
    if (!violations.empty())
      throw ConfigError("sweep point " + std::to_string(i) + " (value " +
                        std::to_string(value) + ") violates: " + violations.front());
    Trajectory traj = run_scenario(cfg);
    std::string stages;
    for (const auto& v : traj.outcome.stages_visited) {
      if (!stages.empty()) stages += '|';
      stages += to_string(v.stage);
    }
    csv << i << ',' << param << ',' << num(value) << ','
        << to_string(traj.outcome.verdict) << ',' << stages << ','
        << num(traj.outcome.terminal_state.t) << '\n';
  }
  fs::create_directories(output_dir);
  write_file(fs::path(output_dir) / "sweep.csv", csv.str());
  return 0;
}

int cmd_barrier_table(double nu, double r0, double r_a, int n,
                      const std::string& output_path) {
  if (n < 2) throw ConfigError("barrier-table requires n >= 2");
  if (!(nu > 0.0 && nu <= 1.0)) throw ConfigError("nu must lie in (0, 1]");
  if (!(r0 > 1.0)) throw ConfigError("r0 must exceed 1");
  std::ostringstream csv;
  csv << "R,theta_G,theta_p,theta_c\n";
  for (int i = 0; i < n; ++i) {
    double R = 1.0 + (r0 - 1.0) * i / (n - 1);
    csv << num(R) << ',' << num(theta_G(R, nu)) << ',';
    if (auto tp = theta_p(R, r_a)) csv << num(*tp);
    csv << ',' << num(critical_theta(R, nu)) << '\n';
  }
  fs::path p(output_path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  write_file(p, csv.str());
  return 0;
}

int cmd_verify(const std::string& output_dir) {
  nlohmann::ordered_json report;
  bool all_pass = true;

  // Winner-map agreement against the closed-form barrier.
  {
    GridSpec grid;
    WinnerMap map = discrete_winner_map(0.5, 1.8, grid);
    AgreementReport rep = compare_with_barrier(map);
    bool pass = rep.rate >= 0.98;
    all_pass &= pass;
    report["winner_map"] = {{"grid", {grid.n_r, grid.n_theta}},
                           {"agreement_rate", rep.rate},
                           {"agree", rep.agree},
                           {"total", rep.total},
                           {"unknown", rep.unknown},
                           {"excluded_band", rep.excluded},
                           {"pass", pass}};
    std::cout << (pass ? "[PASS]" : "[FAIL]")
              << " winner-map agreement: " << rep.rate * 100.0 << "% ("
              << rep.agree << "/" << rep.total << ", " << rep.excluded
              << " barrier-band cells excluded)\n";
  }

  // Constant-control deviation sweeps around the equilibrium laws.
  {
    ScenarioConfig cfg;
    cfg.nu = 0.5;
    cfg.tsr_radius = 1.8;
    cfg.asr_radius = 0.2;
    int dominated = 0;
    double worst = -1e300;
    for (int i = 0; i < 20; ++i) {
      double R = 1.1 + 0.6 * (i % 10) / 9.0;
      double th = (theta_G(R, cfg.nu) + 0.2 + 0.1 * (i / 10)) * (i % 2 ? -1.0 : 1.0);
      GameState s{0.0, R, th, 0.0, th};
      auto ra = attacker_deviation_test(s, cfg, 64, 10.0);
      auto rd = defender_deviation_test(s, cfg, 9, 10.0);
      dominated += ra.dominated + rd.dominated;
      worst = std::max({worst, ra.best_improvement, rd.best_improvement});
    }
    int escape_dominated = 0;
    for (double R : {1.1, 1.3, 1.5, 1.7}) {
      GameState s{0.0, R, 0.0, 0.0, 0.0};
      auto re = escape_deviation_test(s, cfg, 33, 10.0);
      escape_dominated += re.dominated;
      worst = std::max(worst, re.best_improvement);
    }
    bool pass = dominated == 0 && escape_dominated == 0;
    all_pass &= pass;
    report["deviation"] = {{"states", 20},
                          {"dominated", dominated + escape_dominated},
                          {"max_improvement", worst},
                          {"pass", pass}};
    std::cout << (pass ? "[PASS]" : "[FAIL]")
              << " deviation sweeps: " << dominated + escape_dominated
              << " dominating deviations, max improvement " << worst << "\n";
  }

  // Barrier invariance under equilibrium play.
  {
    double max_dev = 0.0, max_rf = 0.0, max_thf = 0.0;
    for (double nu : {0.3, 0.5, 0.8}) {
      for (double R : {1.1, 1.15}) {
        double th0 = theta_G(R, nu);
        ScenarioConfig cfg;
        cfg.nu = nu;
        cfg.perception_mode = PerceptionMode::Unconstrained;
        cfg.attacker_start = {R * std::cos(th0), R * std::sin(th0)};
        cfg.defender_start_angle = 0.0;
        Trajectory traj = run_scenario(cfg);
        for (const auto& s : traj.samples) {
          double tg = theta_G(std::max(s.R, 1.0), nu);
          max_dev = std::max(max_dev, std::abs(s.theta - tg));
        }
        max_rf = std::max(max_rf, std::abs(traj.outcome.terminal_state.R - 1.0));
        max_thf = std::max(max_thf, std::abs(traj.outcome.terminal_state.theta));
      }
    }
    bool pass = max_dev <= 1e-3 && max_rf <= 1e-3 && max_thf <= 1e-3;
    all_pass &= pass;
    report["barrier_invariance"] = {{"max_theta_deviation", max_dev},
                                    {"max_terminal_R_error", max_rf},
                                    {"max_terminal_theta", max_thf},
                                    {"pass", pass}};
    std::cout << (pass ? "[PASS]" : "[FAIL]")
              << " barrier invariance: max |theta - theta_G(R)| = " << max_dev
              << "\n";
  }

  report["pass"] = all_pass;
  fs::create_directories(output_dir);
  write_file(fs::path(output_dir) / "verify_report.json", report.dump(2) + "\n");
  return all_pass ? 0 : 3;
}

}  // namespace pgame::tools
