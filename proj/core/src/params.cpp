#include "dit/params.hpp"

#include <cmath>
#include <limits>

#include "dit/errors.hpp"

namespace dit {

SystemParams paper_defaults() { return SystemParams{}; }

ValidationReport validate(const SystemParams& p) {
  ValidationReport report;
  auto require = [&](bool ok, const char* message) {
    if (!ok) report.failures.emplace_back(message);
  };

  const double fields[] = {p.gamma, p.kappa, p.g1,    p.g2, p.tau2,
                           p.tau3,  p.delta, p.omega0, p.nu};
  for (double v : fields) {
    if (!std::isfinite(v)) {
      report.failures.emplace_back("all parameters must be finite");
      return report;
    }
  }

  require(p.gamma > 0.0, "gamma must be positive");
  require(p.kappa >= 0.0, "kappa must be non-negative");
  require(p.tau2 > 0.0, "tau2 must be positive");
  require(p.tau3 > 0.0, "tau3 must be positive");
  require(p.g1 >= 0.0, "g1 must be non-negative");
  require(p.g2 >= 0.0, "g2 must be non-negative");

  const double linewidth = p.gamma + p.kappa;
  if (!(std::abs(p.delta) < linewidth)) {
    report.warnings.emplace_back("dipole outside cavity linewidth: |delta| >= gamma + kappa");
  }
  if (!(std::abs(p.omega0 - p.nu) < linewidth)) {
    report.warnings.emplace_back(
        "second transition outside cavity linewidth: |omega0 - nu| >= gamma + kappa");
  }
  return report;
}

double weak_excitation_bound(const SystemParams& p) {
  if (!(p.gamma > 0.0)) throw InvalidInput("weak_excitation_bound: gamma must be positive");
  return p.g1 * p.g1 / p.gamma;
}

double quality_factor(const SystemParams& p) {
  if (p.kappa == 0.0) return std::numeric_limits<double>::infinity();
  return p.omega0 / p.kappa;
}

}  // namespace dit
