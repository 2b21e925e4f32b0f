#include "dit/cli/run.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <system_error>

#include "dit/cli/svg.hpp"
#include "dit/errors.hpp"
#include "dit/oracle.hpp"
#include "dit/spectrum.hpp"
#include "dit/stark.hpp"

namespace dit::cli {

namespace {

// Write failures abort the run with kExitInvalid.
struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string number_label(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string drive_label(const StarkDrive& d) {
  if (d.is_off()) return "delta_inf";
  std::string label = "delta_" + number_label(d.detuning);
  if (d.mode == DriveMode::PhotonNumber) return label + "_n_" + number_label(d.n_photons);
  return label + "_flux_" + number_label(d.input_flux);
}

std::string legend_label(const StarkDrive& d, double g) {
  if (d.is_off()) return "Delta = inf";
  if (g > 0.0) {
    const double multiple = d.detuning / g;
    if (std::abs(multiple - std::round(multiple)) < 1e-9) {
      return "Delta = " + number_label(std::round(multiple)) + "g";
    }
  }
  return "Delta = " + number_label(d.detuning);
}

class Writer {
 public:
  explicit Writer(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec || !std::filesystem::is_directory(dir_)) {
      throw OutputError("cannot create output directory '" + dir_.string() + "'");
    }
  }

  void write(const std::string& name, const std::string& content) {
    std::ofstream out(dir_ / name, std::ios::binary | std::ios::trunc);
    out << content;
    out.close();
    if (!out) throw OutputError("cannot write '" + (dir_ / name).string() + "'");
    files_.push_back(name);
  }

  const std::vector<std::string>& files() const { return files_; }

 private:
  std::filesystem::path dir_;
  std::vector<std::string> files_;
};

std::string csv_text(const SpectrumGrid& grid) {
  std::ostringstream out;
  write_csv(out, grid);
  return out.str();
}

Series reflectivity_series(const std::string& label, const SpectrumGrid& grid) {
  Series s{label, grid.detunings, {}, 0.0};
  s.y.reserve(grid.responses.size());
  for (const ComplexResponse& c : grid.responses) s.y.push_back(c.reflectivity);
  return s;
}

// Principal phase in units of pi, broken at the +-pi wrap.
Series phase_series(const std::string& label, const SpectrumGrid& grid) {
  Series s{label, grid.detunings, {}, 1.0};
  s.y.reserve(grid.responses.size());
  for (const ComplexResponse& c : grid.responses) s.y.push_back(c.phase / std::numbers::pi);
  return s;
}

std::vector<double> grid_points(const GridSpec& g) {
  if (g.points < 2) throw InvalidInput("grid needs at least 2 points");
  if (!(g.min < g.max)) throw InvalidInput("grid requires MIN < MAX");
  return linspace(g.min, g.max, g.points);
}

std::string g_label(double g) { return "g1 = " + number_label(g) + " THz"; }

void run_spectrum(const RunConfig& c, const Formats& f, Writer& w) {
  const bool phase = c.command == Command::Phase;
  const SpectrumGrid grid = sweep(c.params, grid_points(effective_grid(c)));
  const std::string stem = phase ? "phase" : "spectrum";
  if (f.csv) w.write(stem + ".csv", csv_text(grid));
  if (f.svg) {
    Plot plot;
    plot.x_label = "detuning from cavity resonance (THz)";
    if (phase) {
      plot.title = "Reflection phase";
      plot.y_label = "phase / pi";
      plot.series.push_back(phase_series(g_label(c.params.g1), grid));
    } else {
      plot.title = "Cavity reflectivity";
      plot.y_label = "reflectivity R";
      plot.series.push_back(reflectivity_series(g_label(c.params.g1), grid));
    }
    w.write(stem + ".svg", render_svg(plot));
  }
}

void write_kerr(const SystemParams& params, const std::vector<StarkDrive>& drives, const std::vector<double>& grid,
                LossSign sign, const Formats& f, const std::string& prefix,
                const std::vector<std::string>& labels, Writer& w) {
  const std::vector<SpectrumGrid> curves = kerr_sweep(params, drives, grid, sign);
  Plot plot{"Reflection phase with a Stark field (g = " + number_label(params.g2) + " THz)",
            "detuning from cavity resonance (THz)", "phase / pi", {}};
  for (std::size_t k = 0; k < curves.size(); ++k) {
    if (f.csv) w.write(prefix + labels[k] + ".csv", csv_text(curves[k]));
    if (f.json) w.write(prefix + labels[k] + ".json", stark_sidecar_json(params, drives[k], sign));
    plot.series.push_back(phase_series(legend_label(drives[k], params.g2), curves[k]));
  }
  if (f.svg) w.write(prefix + "phase.svg", render_svg(plot));
}

void run_kerr(const RunConfig& c, const Formats& f, Writer& w) {
  const std::vector<StarkDrive> drives = c.drives.empty() ? default_kerr_drives(c.params) : c.drives;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < drives.size(); ++k) labels.push_back(std::to_string(k) + "_" + drive_label(drives[k]));
  write_kerr(c.params, drives, grid_points(effective_grid(c)), c.loss_sign, f, "kerr_", labels, w);
}

bool run_oracle(const RunConfig& c, Writer& w, std::ostream& log) {
  const std::vector<double> grid = grid_points(effective_grid(c));
  bool pass = true;

  auto check = [&](std::complex<double> shift, const std::string& name, const std::string& what) {
    GridCheckOptions options;
    options.effective_dipole_shift = shift;
    const GridCheckReport report = oracle_grid_check(c.params, grid, c.tol, options);
    w.write(name, to_json(report));
    std::size_t unconverged = 0;
    for (const GridCheckPoint& p : report.points) unconverged += p.converged ? 0 : 1;
    char line[256];
    std::snprintf(line, sizeof line, "oracle-check %s: %zu points, max_dev = %.3e, tol = %.3e, unconverged = %zu -> %s\n",
                  what.c_str(), report.points.size(), report.max_dev, report.tol, unconverged,
                  report.pass ? "PASS" : "FAIL");
    log << line;
    pass = pass && report.pass;
  };

  if (c.drives.empty()) {
    check({0.0, 0.0}, "oracle_report.json", "reflection");
  } else {
    for (std::size_t k = 0; k < c.drives.size(); ++k) {
      const auto shift = effective_dipole_shift(stark_operator(c.params, c.drives[k]), c.loss_sign);
      check(shift, "oracle_report_" + std::to_string(k) + ".json", drive_label(c.drives[k]));
    }
  }
  return pass;
}

void run_figures(const RunConfig& c, const Formats& f, Writer& w) {
  const std::vector<double> wide = c.grid_set ? grid_points(effective_grid(c)) : linspace(-3.0, 3.0, 2001);

  Plot reflectivity{"Cavity reflectivity for several g1", "detuning from cavity resonance (THz)",
                    "reflectivity R", {}};
  Plot phase{"Reflection phase for several g1", "detuning from cavity resonance (THz)", "phase / pi", {}};
  for (double g : {0.0, 0.03, 0.1, 0.3}) {
    SystemParams p = c.params;
    p.g1 = g;
    const SpectrumGrid grid = sweep(p, wide);
    if (f.csv) w.write("fig2_3_g1_" + number_label(g) + ".csv", csv_text(grid));
    reflectivity.series.push_back(reflectivity_series(g_label(g), grid));
    phase.series.push_back(phase_series(g_label(g), grid));
  }
  if (f.svg) {
    w.write("fig2_reflectivity.svg", render_svg(reflectivity));
    w.write("fig3_phase.svg", render_svg(phase));
  }

  const std::vector<double> narrow = linspace(-1.0, 1.0, 2001);
  const std::vector<StarkDrive> drives = c.drives.empty() ? default_kerr_drives(c.params) : c.drives;
  std::vector<std::string> labels;
  for (const StarkDrive& d : drives) {
    std::string label = drive_label(d);
    if (!d.is_off() && c.params.g2 > 0.0) {
      const double multiple = d.detuning / c.params.g2;
      if (std::abs(multiple - std::round(multiple)) < 1e-9 && d.mode == DriveMode::PhotonNumber &&
          d.n_photons == 1.0) {
        const long m = std::lround(multiple);
        label = std::string("delta_") + (m < 0 ? "m" : "p") + std::to_string(std::labs(m)) + "g";
      }
    }
    labels.push_back(label);
  }
  write_kerr(c.params, drives, narrow, c.loss_sign, f, "fig4_", labels, w);
}

}  // namespace

RunResult run(const RunConfig& c, std::ostream& log) {
  RunResult result;
  const ValidationReport report = validate(c.params);
  for (const std::string& warning : report.warnings) log << "warning: " << warning << "\n";
  if (!report.ok()) {
    for (const std::string& failure : report.failures) log << "error: " << failure << "\n";
    result.exit_code = kExitInvalid;
    return result;
  }
  if (!(c.tol > 0.0)) {
    log << "error: tol must be positive\n";
    result.exit_code = kExitInvalid;
    return result;
  }

  const Formats formats = effective_formats(c);
  try {
    Writer writer(c.output_dir);
    bool oracle_pass = true;
    switch (c.command) {
      case Command::Spectrum:
      case Command::Phase: run_spectrum(c, formats, writer); break;
      case Command::Kerr: run_kerr(c, formats, writer); break;
      case Command::OracleCheck: oracle_pass = run_oracle(c, writer, log); break;
      case Command::Figures: run_figures(c, formats, writer); break;
    }
    if (formats.json) {
      std::vector<std::string> outputs = writer.files();
      outputs.push_back("manifest.json");
      writer.write("manifest.json", manifest_json(c, outputs));
    }
    result.files = writer.files();
    if (!oracle_pass) result.exit_code = kExitOracleFailed;
  } catch (const InvalidInput& e) {
    log << "error: " << e.what() << "\n";
    result.exit_code = kExitInvalid;
  } catch (const OutputError& e) {
    log << "error: " << e.what() << "\n";
    result.exit_code = kExitInvalid;
  }
  return result;
}

}  // namespace dit::cli
