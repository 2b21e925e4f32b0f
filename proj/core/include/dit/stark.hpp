#pragma once

#include <complex>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "dit/params.hpp"
#include "dit/spectrum.hpp"

namespace dit {

enum class DriveMode { PhotonNumber, InputFlux };

/// Second (Stark) field at frequency nu + detuning.
///
/// An infinite detuning means the field is absent. The photon number is
/// either given directly or derived from an input flux as flux / gamma.
struct StarkDrive {
  double detuning = std::numeric_limits<double>::infinity();
  DriveMode mode = DriveMode::PhotonNumber;
  double n_photons = 0.0;
  double input_flux = 0.0;  ///< photons/ps, InputFlux mode only

  static StarkDrive none() { return {}; }
  static StarkDrive photons(double detuning, double n) {
    return {detuning, DriveMode::PhotonNumber, n, 0.0};
  }
  static StarkDrive flux(double detuning, double photons_per_ps) {
    return {detuning, DriveMode::InputFlux, 0.0, photons_per_ps};
  }

  bool is_off() const { return std::isinf(detuning); }

  /// Intracavity photon number at nu + detuning.
  double photon_number(const SystemParams& params) const;

  friend bool operator==(const StarkDrive&, const StarkDrive&) = default;
};

struct StarkValue {
  std::complex<double> s;

  double shift() const { return s.real(); }
  double two_photon_loss() const { return s.imag(); }
};

/// Cavity amplitude per unit input amplitude at the Stark frequency:
/// exact -sqrt(gamma) / (i(omega0 - nu - detuning) + gamma), and the
/// broadband approximation -1/sqrt(gamma).
struct CavityAmplitudeRatio {
  std::complex<double> exact;
  double approximate = 0.0;
  double relative_error = 0.0;  ///< |exact - approximate| / |approximate|
};

CavityAmplitudeRatio cavity_amplitude_ratio(const SystemParams& params, double detuning);

/// S = 2 i g2^2 n / (i detuning + tau3/2)
///   = 2 g2^2 n (detuning + i tau3/2) / (detuning^2 + tau3^2/4).
/// Returns zero for an absent field. Throws SingularInput when
/// detuning == 0 and tau3 == 0, InvalidInput for negative photon numbers.
StarkValue stark_operator(const SystemParams& params, const StarkDrive& drive);

/// How Im(S) enters the dipole damping.
///
/// Literal substitutes S as-is inside i(dw + delta + S), which subtracts
/// Im(S) from the damping. Absorptive substitutes conj(S), so two-photon
/// absorption adds damping instead.
enum class LossSign { Literal, Absorptive };

std::complex<double> effective_dipole_shift(const StarkValue& value, LossSign sign = LossSign::Literal);

ComplexResponse shifted_reflection(const SystemParams& params, const StarkDrive& drive, double detuning,
                                   LossSign sign = LossSign::Literal);

/// One unwrapped spectrum per drive on a shared grid.
std::vector<SpectrumGrid> kerr_sweep(const SystemParams& params, std::span<const StarkDrive> drives,
                                     std::span<const double> grid, LossSign sign = LossSign::Literal);

/// JSON sidecar for a Kerr curve: the drive and the resulting complex S.
std::string stark_sidecar_json(const SystemParams& params, const StarkDrive& drive,
                               LossSign sign = LossSign::Literal);

const char* to_string(LossSign sign);
const char* to_string(DriveMode mode);

}  // namespace dit
