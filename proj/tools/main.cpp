#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "scenario_io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Perimeter-defense differential game simulator"};
  app.require_subcommand(1);

  std::string scenario_path, output_dir = "out", name, param, table_path;
  double lo = 0.0, hi = 0.0, nu = 0.5, r0 = 1.8, r_a = -1.0;
  int n = 0;

  auto* run = app.add_subcommand("run", "Simulate a scenario file");
  run->add_option("scenario", scenario_path, "scenario JSON file")->required();
  run->add_option("-o,--output", output_dir, "output directory");

  auto* figures = app.add_subcommand("figures", "Run a built-in figure preset");
  figures->add_option("name", name, "fig3a|fig3b|fig4a|fig4b|fig5a|fig5b")->required();
  figures->add_option("-o,--output", output_dir, "output directory");

  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter of a scenario");
  sweep->add_option("scenario", scenario_path, "base scenario JSON file")->required();
  sweep->add_option("--param", param, "nu|rA|R0|theta0")->required();
  sweep->add_option("--lo", lo)->required();
  sweep->add_option("--hi", hi)->required();
  sweep->add_option("--n", n)->required();
  sweep->add_option("-o,--output", output_dir, "output directory");

  auto* verify = app.add_subcommand("verify", "Run the oracle verification suites");
  verify->add_option("-o,--output", output_dir, "output directory");

  auto* table = app.add_subcommand("barrier-table", "Emit the barrier curve as CSV");
  table->add_option("--nu", nu, "speed ratio")->required();
  table->add_option("--r0", r0, "TSR outer radius")->required();
  table->add_option("--n", n, "number of rows")->required();
  table->add_option("--ra", r_a, "ASR radius for the theta_p column");
  table->add_option("path", table_path, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run) return pgame::tools::cmd_run(scenario_path, output_dir);
    if (*figures) return pgame::tools::cmd_figures(name, output_dir);
    if (*sweep)
      return pgame::tools::cmd_sweep(scenario_path, param, lo, hi, n, output_dir);
    if (*verify) return pgame::tools::cmd_verify(output_dir);
    if (*table) {
      if (r_a < 0.0) r_a = std::min(r0 - 1.0, 1.0);
      return pgame::tools::cmd_barrier_table(nu, r0, r_a, n, table_path);
    }
  } catch (const pgame::tools::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
