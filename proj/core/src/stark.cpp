#include "dit/stark.hpp"

#include <cmath>

#include "dit/errors.hpp"

namespace dit {

namespace {
using cplx = std::complex<double>;
}

double StarkDrive::photon_number(const SystemParams& params) const {
  if (mode == DriveMode::PhotonNumber) return n_photons;
  if (!(params.gamma > 0.0)) throw InvalidInput("StarkDrive: gamma must be positive");
  return input_flux / params.gamma;
}

CavityAmplitudeRatio cavity_amplitude_ratio(const SystemParams& p, double detuning) {
  if (!(p.gamma > 0.0)) throw InvalidInput("cavity_amplitude_ratio: gamma must be positive");
  const double root = std::sqrt(p.gamma);
  CavityAmplitudeRatio out;
  out.exact = -root / cplx{p.gamma, p.omega0 - p.nu - detuning};
  out.approximate = -1.0 / root;
  out.relative_error = std::abs(out.exact - out.approximate) / std::abs(out.approximate);
  return out;
}

StarkValue stark_operator(const SystemParams& p, const StarkDrive& drive) {
  if (std::isnan(drive.detuning)) throw InvalidInput("stark_operator: detuning is NaN");
  if (!(drive.n_photons >= 0.0) || !(drive.input_flux >= 0.0)) {
    throw InvalidInput("stark_operator: photon number and input flux must be non-negative");
  }
  if (drive.is_off()) return {};

  const double n = drive.photon_number(p);
  const double half_width = p.tau3 / 2.0;
  const double denominator = drive.detuning * drive.detuning + half_width * half_width;
  if (denominator == 0.0) {
    throw SingularInput("stark_operator: resonant drive with tau3 == 0 diverges");
  }
  const double scale = 2.0 * p.g2 * p.g2 * n / denominator;
  return {cplx{scale * drive.detuning, scale * half_width}};
}

std::complex<double> effective_dipole_shift(const StarkValue& value, LossSign sign) {
  return sign == LossSign::Literal ? value.s : std::conj(value.s);
}

ComplexResponse shifted_reflection(const SystemParams& p, const StarkDrive& drive, double detuning,
                                   LossSign sign) {
  return reflection(p, detuning, effective_dipole_shift(stark_operator(p, drive), sign));
}

std::vector<SpectrumGrid> kerr_sweep(const SystemParams& p, std::span<const StarkDrive> drives,
                                     std::span<const double> grid, LossSign sign) {
  if (drives.empty()) throw InvalidInput("kerr_sweep: drive list is empty");
  check_grid(grid);

  std::vector<SpectrumGrid> out;
  out.reserve(drives.size());
  for (const StarkDrive& drive : drives) {
    const cplx shift = effective_dipole_shift(stark_operator(p, drive), sign);
    SpectrumGrid curve;
    curve.params = p;
    curve.detunings.assign(grid.begin(), grid.end());
    curve.responses.reserve(grid.size());
    for (double dw : grid) curve.responses.push_back(reflection(p, dw, shift));
    unwrap_phases(curve.responses);
    out.push_back(std::move(curve));
  }
  return out;
}

const char* to_string(LossSign sign) {
  return sign == LossSign::Literal ? "literal" : "absorptive";
}

const char* to_string(DriveMode mode) {
  return mode == DriveMode::PhotonNumber ? "photon-number" : "input-flux";
}

}  // namespace dit
