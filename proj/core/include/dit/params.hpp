#pragma once

#include <string>
#include <vector>

namespace dit {

/// Physical rates and frequencies of the cavity + 3-level emitter system.
///
/// Every field is expressed in rad/ps. The literature quotes these values in
/// "THz" and substitutes them directly into the rate equations, so 1 THz in a
/// config file maps to 1.0 here with no 2*pi factor.
struct SystemParams {
  double gamma = 6.0;     ///< cavity -> waveguide energy coupling
  double kappa = 0.1;     ///< cavity -> parasitic leaky modes
  double g1 = 0.3;        ///< vacuum Rabi frequency, |1> <-> |2>
  double g2 = 0.3;        ///< vacuum Rabi frequency, |2> <-> |3>
  double tau2 = 0.001;    ///< dipole decay rate of |2>
  double tau3 = 0.001;    ///< dipole decay rate of |3>
  double delta = 0.0;     ///< |1>-|2> detuning from the cavity center
  double omega0 = 1000.0; ///< cavity center frequency
  double nu = 1000.0;     ///< |2>-|3> transition frequency

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// Quantum-dot parameter set: gamma = 6 THz, kappa = 0.1 THz, tau2 = 1 GHz,
/// delta = 0, g1 = g2 = 0.3 THz, Q = omega0 / kappa = 10^4.
SystemParams paper_defaults();

struct ValidationReport {
  std::vector<std::string> failures;
  std::vector<std::string> warnings;

  bool ok() const { return failures.empty(); }
};

/// Checks the sign constraints on every rate (hard failures) and whether both
/// transitions sit inside the cavity linewidth (warnings). Never throws.
ValidationReport validate(const SystemParams& params);

/// Input photon flux (photons/ps) below which the emitter stays essentially
/// in its ground state: g1^2 / gamma.
double weak_excitation_bound(const SystemParams& params);

/// omega0 / kappa.
double quality_factor(const SystemParams& params);

}  // namespace dit
