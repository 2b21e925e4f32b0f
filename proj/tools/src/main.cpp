#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "dit/cli/config.hpp"
#include "dit/cli/run.hpp"

int main(int argc, char** argv) {
  using namespace dit::cli;

  CLI::App app{"Reflection spectra of a cavity coupled to a single 3-level emitter"};
  app.set_version_flag("--version", "dit 0.1.0");

  std::string command;
  app.add_option("command", command, "spectrum | phase | kerr | oracle-check | figures")->required();

  std::string config_file;
  app.add_option("--config", config_file, "key = value config file, or a JSON run manifest");

  // Flag values are applied in this order, after the config file.
  const std::pair<const char*, const char*> scalar_flags[] = {
      {"gamma", "cavity-waveguide coupling (e.g. 6THz)"},
      {"kappa", "leaky-mode coupling"},
      {"g1", "vacuum Rabi frequency of the 1-2 transition"},
      {"g2", "vacuum Rabi frequency of the 2-3 transition"},
      {"tau2", "dipole decay rate of |2>"},
      {"tau3", "dipole decay rate of |3>"},
      {"delta", "1-2 transition detuning from the cavity"},
      {"omega0", "cavity center frequency"},
      {"nu", "2-3 transition frequency"},
      {"grid", "detuning grid MIN:MAX:N"},
      {"points", "override the number of grid points"},
      {"tol", "oracle-check comparison tolerance"},
      {"out", "output directory"},
      {"formats", "comma-separated subset of csv,json,svg"},
      {"loss-sign", "literal (default) or absorptive"},
  };
  std::vector<std::optional<std::string>> scalar_values(std::size(scalar_flags));
  for (std::size_t k = 0; k < std::size(scalar_flags); ++k) {
    app.add_option(std::string("--") + scalar_flags[k].first, scalar_values[k], scalar_flags[k].second);
  }

  std::vector<std::string> drives;
  app.add_option("--drive", drives, "Stark field DELTA:NPHOTONS or DELTA:FLUX/ps (repeatable; DELTA may be inf)")
      ->take_last()
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->expected(1);
  app.add_flag("--seedless", "accepted for reproducible pipelines; the simulator uses no random numbers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  RunConfig config;
  try {
    if (!config_file.empty()) config = load_config_file(config_file, config);
    config.command = parse_command(command);
    for (std::size_t k = 0; k < std::size(scalar_flags); ++k) {
      if (scalar_values[k]) apply_setting(config, scalar_flags[k].first, *scalar_values[k]);
    }
    if (!drives.empty()) {
      config.drives.clear();
      for (const std::string& d : drives) apply_setting(config, "drive", d);
    }
  } catch (const ConfigError& e) {
    std::cerr << "dit: " << (config_file.empty() || e.line() == 0 ? "" : config_file + ":") << e.what() << "\n";
    return kExitInvalid;
  }

  const RunResult result = run(config, std::cerr);
  for (const std::string& file : result.files) std::cout << (config.output_dir / file).string() << "\n";
  return result.exit_code;
}
