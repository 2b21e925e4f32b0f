#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "dit/params.hpp"

namespace dit {

/// Complex reflection amplitude r = sqrt(R) exp(i phi).
struct ComplexResponse {
  std::complex<double> r;
  double reflectivity = 0.0;     ///< |r|^2
  double phase = 0.0;            ///< principal value in (-pi, pi]
  double phase_unwrapped = 0.0;  ///< continuous along a sweep; equals phase for point queries

  static ComplexResponse from_amplitude(std::complex<double> r);
};

struct SpectrumGrid {
  std::vector<double> detunings;  ///< strictly increasing, rad/ps
  std::vector<ComplexResponse> responses;
  SystemParams params;
};

/// Maps an angle onto (-pi, pi].
double wrap_phase(double angle);

/// Reflection of a monochromatic input detuned by `detuning` from the cavity
/// resonance. The detuning enters the response formula as written, so the
/// sign of the phase follows that convention rather than omega - omega0.
ComplexResponse reflection(const SystemParams& params, double detuning);

/// Same response with the dipole resonance displaced by a complex amount
/// (delta -> delta + dipole_shift). Real part detunes, imaginary part
/// changes the dipole damping through i(dw + delta + shift) + tau2/2.
/// A zero shift gives results bit-identical to the two-argument overload.
ComplexResponse reflection(const SystemParams& params, double detuning,
                           std::complex<double> dipole_shift);

/// 4 g1^2 / (tau2 (gamma + kappa)).
double purcell_factor(const SystemParams& params);

/// (gamma - kappa) / (gamma + kappa).
double bare_reflectivity(const SystemParams& params);

/// Closed form of r at zero detuning, (F_p - r0) / (F_p + 1). Only valid for
/// a dipole resonant with the cavity; throws InvalidInput when delta != 0.
double resonant_reflection(const SystemParams& params);

/// Detuning at which the dipole-induced 0 phase returns to the bare-cavity
/// pi phase: g1^2 / ((gamma + kappa) / 2).
double crossover_detuning(const SystemParams& params);

/// Phase of r with the dipole minus phase of the same cavity with g1 = 0,
/// wrapped to (-pi, pi].
double phase_contrast(const SystemParams& params, double detuning);

/// In-place unwrap of phase_unwrapped: adjacent jumps larger than pi are
/// corrected by multiples of 2 pi, starting from the first principal value.
void unwrap_phases(std::span<ComplexResponse> responses);

/// Evaluates reflection at every grid point and unwraps the phase.
/// Throws InvalidInput for an empty or non-increasing grid.
SpectrumGrid sweep(const SystemParams& params, std::span<const double> grid);

/// n evenly spaced points on [lo, hi], endpoints included.
std::vector<double> linspace(double lo, double hi, std::size_t n);

/// Throws InvalidInput unless the grid is non-empty, finite and strictly increasing.
void check_grid(std::span<const double> grid);

/// CSV with header
/// detuning_thz,re_r,im_r,reflectivity,phase_rad,phase_unwrapped_rad
/// and 17 significant digits per value.
void write_csv(std::ostream& out, const SpectrumGrid& grid);

}  // namespace dit
