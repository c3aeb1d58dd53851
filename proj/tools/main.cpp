// Command-line front end: solve a single configuration, sweep a refinement
// table, or list the built-in problems.
//
// Exit codes: 0 success, 2 configuration error, 3 solver failure, 4 output
// error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "stbspline/experiment.hpp"
#include "stbspline/version.hpp"

namespace {

using Settings = std::vector<std::pair<std::string, std::string>>;

// Option values arrive as strings and funnel through the same key parser the
// config files use, so both sources validate identically.
void bind_setting(CLI::App* cmd, const std::string& flag, const std::string& key,
                  Settings& settings, const std::string& help) {
  cmd->add_option_function<std::string>(
      flag, [&settings, key](const std::string& v) { settings.push_back({key, v}); }, help);
}

void bind_switch(CLI::App* cmd, const std::string& flag, const std::string& key,
                 const std::string& value, Settings& settings, const std::string& help) {
  cmd->add_flag_callback(
      flag, [&settings, key, value] { settings.push_back({key, value}); }, help);
}

bool has_key(const Settings& settings, const std::string& key) {
  for (const auto& [k, v] : settings)
    if (k == key) return true;
  return false;
}

void echo_file(const std::filesystem::path& p) {
  std::ifstream f(p);
  if (f) std::cout << f.rdbuf();
}

int run_solve(const std::optional<std::string>& config_path, const Settings& settings) {
  std::optional<std::filesystem::path> file;
  if (config_path) file = *config_path;
  const stbs::runio::RunManifest manifest = stbs::runio::parse_config(file, settings);
  const stbs::runio::OutputBundle bundle = stbs::runio::run_experiment(manifest);
  echo_file(bundle.manifest.out_dir / "summary.txt");
  std::cout << "\nwrote " << bundle.files.size() << " files to "
            << bundle.manifest.out_dir.string() << "\n";
  return 0;
}

int run_sweep_cmd(const std::string& problem, const std::vector<std::string>& nu_lists,
                  const std::vector<std::string>& inc_lists, const Settings& settings) {
  const stbs::problems::ProblemKind kind = stbs::runio::parse_problem_kind(problem);
  stbs::runio::RunManifest scratch = stbs::runio::default_manifest(kind);
  for (const auto& [k, v] : settings) stbs::runio::apply_setting(scratch, k, v);

  stbs::runio::SweepManifest sweep = stbs::runio::default_sweep(kind);
  sweep.front_params = scratch.front_params;
  sweep.base = scratch.cfg;
  sweep.with_plots = scratch.with_plots;
  if (has_key(settings, "out")) sweep.out_dir = scratch.out_dir;
  if (!nu_lists.empty()) {
    sweep.viscosities.clear();
    for (const std::string& s : nu_lists)
      for (double v : stbs::runio::detail::parse_number_list("nu", s))
        sweep.viscosities.push_back(v);
  }
  if (!inc_lists.empty()) {
    sweep.increments.clear();
    for (const std::string& s : inc_lists)
      for (double v : stbs::runio::detail::parse_number_list("h_dt", s))
        sweep.increments.push_back(v);
  }

  const stbs::runio::SweepResult result = stbs::runio::run_sweep(sweep);
  echo_file(sweep.out_dir / "summary.txt");
  std::cout << "\nwrote " << result.files.size() + 2 << " files under "
            << sweep.out_dir.string() << "\n";
  return 0;
}

int run_list() {
  std::cout
      << "shock   domain [0,1]   starts at t=1, runs to t=3.25 by default\n"
         "        decaying pulse; boundary values held at zero on both ends\n"
         "front   domain [0,1]   starts at t=0, runs to t=1.2 by default\n"
         "        travelling wave front (alpha=0.4, mu=0.6, gamma=0.125);\n"
         "        boundary values follow the exact front\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Space-time B-spline collocation solver for the viscous Burgers equation"};
  app.set_version_flag("--version", stbs::version_string);
  app.require_subcommand(1);
  // The short -h would collide with the --h increment option below.
  app.set_help_flag("--help", "Print this help message and exit");

  Settings solve_settings;
  std::optional<std::string> config_path;
  CLI::App* solve = app.add_subcommand("solve", "Run one experiment");
  solve->set_help_flag("--help", "Print this help message and exit");
  solve->add_option("--config", config_path, "Config file with key = value lines");
  bind_setting(solve, "--problem", "problem", solve_settings, "Problem: shock or front");
  bind_setting(solve, "--nu", "nu", solve_settings, "Viscosity");
  bind_setting(solve, "--h", "h", solve_settings, "Space increment");
  bind_setting(solve, "--dt", "dt", solve_settings, "Time increment");
  bind_setting(solve, "--t-start", "t_start", solve_settings, "Start time");
  bind_setting(solve, "--t-end", "t_end", solve_settings, "End time");
  bind_setting(solve, "--mode", "mode", solve_settings, "Reconstruction: summed or direct");
  bind_setting(solve, "--init", "init", solve_settings,
               "Start-up split: pde-derivative or symmetric");
  bind_setting(solve, "--inner-iters", "inner_iters", solve_settings,
               "Relaxation passes per step");
  bind_setting(solve, "--l2-weighting", "l2_weighting", solve_settings,
               "Reported L2 norm: unweighted or h-weighted");
  bind_setting(solve, "--sample-times", "sample_times", solve_settings,
               "Comma-separated times to record (default: t_end)");
  bind_setting(solve, "--out", "out", solve_settings, "Output directory");
  bind_setting(solve, "--alpha", "alpha", solve_settings, "Front parameter alpha");
  bind_setting(solve, "--mu", "mu", solve_settings, "Front parameter mu");
  bind_setting(solve, "--gamma", "gamma", solve_settings, "Front parameter gamma");
  bind_switch(solve, "--oracle", "oracle", "true", solve_settings,
              "Also run the finite-difference reference solver");
  bind_switch(solve, "--plots", "plots", "true", solve_settings, "Write an SVG figure");
  bind_switch(solve, "--no-profiles", "profiles", "false", solve_settings,
              "Skip the per-sample profile CSV files");

  Settings sweep_settings;
  std::string sweep_problem;
  std::vector<std::string> sweep_nus;
  std::vector<std::string> sweep_incs;
  CLI::App* sweep = app.add_subcommand("sweep", "Run a refinement table over nu and h = dt");
  sweep->set_help_flag("--help", "Print this help message and exit");
  sweep->add_option("--problem", sweep_problem, "Problem: shock or front")->required();
  sweep->add_option("--nu", sweep_nus, "Comma-separated viscosities (default 0.01,0.005)");
  sweep->add_option("--h-dt", sweep_incs,
                    "Comma-separated increments h = dt (default 0.01,0.005,0.001)");
  bind_setting(sweep, "--mode", "mode", sweep_settings, "Reconstruction: summed or direct");
  bind_setting(sweep, "--init", "init", sweep_settings,
               "Start-up split: pde-derivative or symmetric");
  bind_setting(sweep, "--inner-iters", "inner_iters", sweep_settings,
               "Relaxation passes per step");
  bind_setting(sweep, "--t-start", "t_start", sweep_settings, "Start time");
  bind_setting(sweep, "--t-end", "t_end", sweep_settings, "End time");
  bind_setting(sweep, "--l2-weighting", "l2_weighting", sweep_settings,
               "Reported L2 norm: unweighted or h-weighted");
  bind_setting(sweep, "--out", "out", sweep_settings, "Output directory (default sweep)");
  bind_setting(sweep, "--alpha", "alpha", sweep_settings, "Front parameter alpha");
  bind_setting(sweep, "--mu", "mu", sweep_settings, "Front parameter mu");
  bind_setting(sweep, "--gamma", "gamma", sweep_settings, "Front parameter gamma");
  bind_switch(sweep, "--plots", "plots", "true", sweep_settings,
              "Write an SVG figure per combination");

  CLI::App* list = app.add_subcommand("list-problems", "Describe the built-in problems");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return run_solve(config_path, solve_settings);
    if (sweep->parsed()) return run_sweep_cmd(sweep_problem, sweep_nus, sweep_incs, sweep_settings);
    if (list->parsed()) return run_list();
  } catch (const stbs::config_error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const stbs::solver_error& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 3;
  } catch (const stbs::io_error& e) {
    std::cerr << "output error: " << e.what() << "\n";
    return 4;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "output error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
