#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bellnoise/harness.hpp"

namespace {

// Exit codes: 0 ok, 1 compare tolerance violated, 2 config/parse error,
// 3 method/geometry pairing error, 4 numerical failure, 5 grid mismatch.

std::string default_output(const std::string& config_arg) {
  std::string stem = config_arg;
  const auto slash = stem.find_last_of('/');
  if (slash != std::string::npos) stem.erase(0, slash + 1);
  const auto dot = stem.find_last_of('.');
  if (dot != std::string::npos && dot > 0) stem.erase(dot);
  return stem + ".csv";
}

int run_command(const std::string& config_arg, std::optional<std::string> out,
                int threads) {
  using namespace bellnoise;
  Scenario scenario;
  try {
    scenario = is_preset(config_arg) ? parse_scenario_text(preset_config(config_arg))
                                     : parse_scenario_file(config_arg);
  } catch (const ConfigError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const MethodGeometryError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  }
  const std::string out_path = out ? *out : default_output(config_arg);
  try {
    write_trace_csv(run_scenario(scenario, threads), out_path);
  } catch (const MethodGeometryError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  } catch (const std::exception& err) {
    std::cerr << "numerical failure: " << err.what() << "\n";
    return 4;
  }
  std::cout << out_path << "\n";
  return 0;
}

int compare_command(const std::vector<std::string>& files, std::optional<double> tol) {
  using namespace bellnoise;
  try {
    const CompareReport report = compare_traces(files, tol);
    std::cout << report.text;
    return report.tolerance_violated ? 1 : 0;
  } catch (const GridMismatchError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 5;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-qubit disentanglement under correlated classical noise"};
  app.require_subcommand(1);

  std::string config_arg;
  std::optional<std::string> out_path;
  int threads = 1;
  auto* run = app.add_subcommand("run", "run a scenario config or preset, write a CSV trace");
  run->add_option("config", config_arg, "config file path or preset name")->required();
  run->add_option("--out", out_path, "output CSV path (default: <config stem>.csv)");
  run->add_option("--threads", threads, "worker threads for the trajectory ensemble")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> compare_files;
  std::optional<double> tolerance;
  auto* cmp = app.add_subcommand("compare", "cross-compare CSV traces per (state, method)");
  cmp->add_option("files", compare_files, "trace CSV files")->required()->expected(-1);
  cmp->add_option("--tol", tolerance, "fail (exit 1) if any pair deviates more than this");

  auto* presets = app.add_subcommand("presets", "bundled figure scenarios");
  auto* presets_list = presets->add_subcommand("list", "list preset names");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return run_command(config_arg, out_path, threads);
  if (cmp->parsed()) return compare_command(compare_files, tolerance);
  if (presets->parsed()) {
    if (presets->get_subcommands().empty() || presets_list->parsed()) {
      for (const auto& name : bellnoise::preset_names())
        std::cout << name << "  " << bellnoise::preset_description(name) << "\n";
    }
    return 0;
  }
  return 0;
}
