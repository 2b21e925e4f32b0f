#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dit/params.hpp"
#include "dit/stark.hpp"

namespace dit::cli {

enum class Command { Spectrum, Phase, Kerr, OracleCheck, Figures };

struct GridSpec {
  double min = -3.0;
  double max = 3.0;
  std::size_t points = 2001;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct Formats {
  bool csv = true;
  bool json = true;
  bool svg = false;

  friend bool operator==(const Formats&, const Formats&) = default;
};

struct RunConfig {
  Command command = Command::Spectrum;
  SystemParams params = paper_defaults();
  GridSpec grid;
  bool grid_set = false;          ///< false: the command's default grid applies
  std::size_t points_override = 0; ///< non-zero replaces the grid's point count
  std::vector<StarkDrive> drives;
  double tol = 1e-6;
  std::filesystem::path output_dir = ".";
  Formats formats;
  bool formats_set = false;  ///< false: csv+json, or everything for `figures`
  LossSign loss_sign = LossSign::Literal;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parse failure; `line` is 0 for command-line values.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, std::size_t line = 0);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Command parse_command(std::string_view name);
const char* to_string(Command command);

/// "6", "6THz", "6 THz", "1 GHz", "250MHz", "0.3 rad/ps" -> rad/ps.
double parse_quantity(std::string_view text);

/// "MIN:MAX:N"; quantities may carry units.
GridSpec parse_grid(std::string_view text);

/// "DELTA:N" (photon number) or "DELTA:F/ps" (input flux); DELTA may be "inf".
StarkDrive parse_drive(std::string_view text);

/// Comma-separated subset of {csv, json, svg}.
Formats parse_formats(std::string_view text);

LossSign parse_loss_sign(std::string_view text);

/// Applies one `key = value` setting. `drive` appends.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Flat `key = value` text, `#` comments. Diagnostics carry the line number.
RunConfig parse_config_text(std::istream& in, RunConfig base = {});

/// JSON run manifest as written by `run`.
RunConfig parse_manifest(std::string_view text, RunConfig base = {});

/// Reads a file in either format; JSON is recognised by a leading '{'.
RunConfig load_config_file(const std::filesystem::path& path, RunConfig base = {});

/// The grid a command sweeps when none is configured.
GridSpec default_grid(Command command);
GridSpec effective_grid(const RunConfig& config);

Formats effective_formats(const RunConfig& config);

/// Drives used by `kerr` when none are configured: Delta in
/// {inf, -20 g2, -10 g2, -6 g2} with one photon each.
std::vector<StarkDrive> default_kerr_drives(const SystemParams& params);

/// Full echo of the configuration plus the files written.
std::string manifest_json(const RunConfig& config, const std::vector<std::string>& outputs);

}  // namespace dit::cli
