#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dit/params.hpp"

namespace dit {

/// Time-domain mean-field model of the driven cavity + dipole, in the frame
/// rotating at the drive frequency:
///
///   db/dt     = -(i dw + (gamma + kappa)/2) b - sqrt(gamma) a_in - i g1 sigma
///   dsigma/dt = -(i (dw + delta + S) + tau2/2) sigma - i g1 b
///
/// with a_out = a_in + sqrt(gamma) b. Noise terms are dropped and the
/// emitter inversion is frozen at its ground-state value, which is exact in
/// the weak-excitation limit.
struct OracleConfig {
  SystemParams params;
  double drive_detuning = 0.0;                     ///< rad/ps
  std::complex<double> drive_amplitude{1e-3, 0.0}; ///< a_in, photons^1/2 ps^-1/2
  double dt = 0.0;                                 ///< ps; 0 selects max_stable_dt
  double t_max = 1e5;                              ///< ps
  double convergence_tol = 1e-12;                  ///< relative change of b per window
  std::complex<double> effective_dipole_shift{0.0, 0.0};
};

/// Largest step accepted by integrate/evolve:
/// 0.01 / max(gamma + kappa, tau2, |dw|, g1, |dw + delta + S|).
double max_stable_dt(const OracleConfig& config);

struct OracleState {
  std::complex<double> b;
  std::complex<double> sigma;
};

struct OracleRun {
  std::complex<double> steady_b;
  std::complex<double> steady_sigma;
  std::complex<double> steady_r;  ///< NaN when degenerate
  bool converged = false;
  bool degenerate = false;        ///< a_in == 0: no reflection ratio exists
  std::size_t iterations = 0;     ///< RK4 steps taken
  double residual = 0.0;
  double dt = 0.0;
  std::vector<std::string> warnings;
};

/// Fixed-step RK4 from b = sigma = 0 up to t_end. Throws InvalidInput for a
/// step above max_stable_dt or a non-positive step / end time.
OracleState evolve(const OracleConfig& config, double t_end);

/// Integrates until |b(t) - b(t - w)| / |b(t)| <= convergence_tol on two
/// consecutive windows of length w = 1/(gamma + kappa), or until t_max.
/// Non-convergence is reported through `converged`, not thrown.
OracleRun integrate(const OracleConfig& config);

/// |r|^2 + (kappa |b|^2 + tau2 |sigma|^2) / |a_in|^2. Equals 1 at steady
/// state when no complex dipole shift is injected.
double energy_balance(const OracleConfig& config, const OracleRun& run);

/// Analytic prediction compared against the oracle: (params, dw, dipole shift) -> r.
using AnalyticModel =
    std::function<std::complex<double>(const SystemParams&, double, std::complex<double>)>;

struct GridCheckOptions {
  std::complex<double> effective_dipole_shift{0.0, 0.0};
  double convergence_tol = 1e-12;
  std::complex<double> drive_amplitude{1e-3, 0.0};
  unsigned threads = 0;  ///< 0 = hardware concurrency
  AnalyticModel analytic; ///< empty = dit::reflection
};

struct GridCheckPoint {
  double detuning = 0.0;
  std::complex<double> analytic_r;
  std::complex<double> oracle_r;
  double abs_dev = 0.0;
  bool converged = false;
  double energy_balance = 0.0;
};

struct GridCheckReport {
  std::vector<GridCheckPoint> points;  ///< sorted by detuning
  double tol = 0.0;
  double max_dev = 0.0;
  bool pass = false;
};

/// Runs integrate at every grid point and compares with the analytic model.
/// A point that fails to converge fails the whole check.
GridCheckReport oracle_grid_check(const SystemParams& params, std::span<const double> grid, double tol,
                                  const GridCheckOptions& options = {});

std::string to_json(const GridCheckReport& report);

}  // namespace dit
