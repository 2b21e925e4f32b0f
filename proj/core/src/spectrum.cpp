#include "dit/spectrum.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

#include "dit/errors.hpp"

namespace dit {

namespace {

using cplx = std::complex<double>;

void require_finite(const SystemParams& p, const char* op) {
  const double fields[] = {p.gamma, p.kappa, p.g1,    p.g2, p.tau2,
                           p.tau3,  p.delta, p.omega0, p.nu};
  for (double v : fields) {
    if (!std::isfinite(v)) throw InvalidInput(std::string(op) + ": non-finite parameter");
  }
}

double linewidth(const SystemParams& p, const char* op) {
  const double total = p.gamma + p.kappa;
  if (!(total > 0.0)) throw InvalidInput(std::string(op) + ": gamma + kappa must be positive");
  return total;
}

}  // namespace

ComplexResponse ComplexResponse::from_amplitude(std::complex<double> r) {
  ComplexResponse out;
  out.r = r;
  out.reflectivity = std::norm(r);
  out.phase = wrap_phase(std::arg(r));
  out.phase_unwrapped = out.phase;
  return out;
}

double wrap_phase(double angle) {
  constexpr double pi = std::numbers::pi;
  if (angle > -pi && angle <= pi) return angle;
  double wrapped = std::remainder(angle, 2.0 * pi);
  if (wrapped <= -pi) wrapped += 2.0 * pi;
  return wrapped;
}

ComplexResponse reflection(const SystemParams& p, double detuning) {
  return reflection(p, detuning, cplx{0.0, 0.0});
}

ComplexResponse reflection(const SystemParams& p, double detuning, std::complex<double> dipole_shift) {
  require_finite(p, "reflection");
  if (!std::isfinite(detuning) || !std::isfinite(dipole_shift.real()) ||
      !std::isfinite(dipole_shift.imag())) {
    throw InvalidInput("reflection: non-finite detuning or dipole shift");
  }
  constexpr cplx i{0.0, 1.0};

  const cplx dipole_detuning = cplx{detuning + p.delta, 0.0} + dipole_shift;
  const cplx dipole_term = (p.g1 * p.g1) / (i * dipole_detuning + p.tau2 / 2.0);
  const cplx common = i * detuning + dipole_term;
  const cplx numerator = common - p.gamma / 2.0 + p.kappa / 2.0;
  const cplx denominator = common + p.gamma / 2.0 + p.kappa / 2.0;
  if (std::abs(denominator) <= 1e-300) throw SingularInput("reflection: vanishing denominator");
  return ComplexResponse::from_amplitude(numerator / denominator);
}

double purcell_factor(const SystemParams& p) {
  const double total = linewidth(p, "purcell_factor");
  if (!(p.tau2 > 0.0)) throw InvalidInput("purcell_factor: tau2 must be positive");
  return 4.0 * p.g1 * p.g1 / (p.tau2 * total);
}

double bare_reflectivity(const SystemParams& p) {
  const double total = linewidth(p, "bare_reflectivity");
  return (p.gamma - p.kappa) / total;
}

double resonant_reflection(const SystemParams& p) {
  if (p.delta != 0.0) {
    throw InvalidInput("resonant_reflection: closed form requires delta == 0");
  }
  const double fp = purcell_factor(p);
  const double r0 = bare_reflectivity(p);
  return (fp - r0) / (fp + 1.0);
}

double crossover_detuning(const SystemParams& p) {
  const double total = linewidth(p, "crossover_detuning");
  return p.g1 * p.g1 / (total / 2.0);
}

double phase_contrast(const SystemParams& p, double detuning) {
  SystemParams bare = p;
  bare.g1 = 0.0;
  return wrap_phase(reflection(p, detuning).phase - reflection(bare, detuning).phase);
}

void unwrap_phases(std::span<ComplexResponse> responses) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (responses.empty()) return;
  double offset = 0.0;
  responses[0].phase_unwrapped = responses[0].phase;
  for (std::size_t k = 1; k < responses.size(); ++k) {
    const double jump = responses[k].phase - responses[k - 1].phase;
    if (jump > std::numbers::pi) {
      offset -= two_pi;
    } else if (jump < -std::numbers::pi) {
      offset += two_pi;
    }
    responses[k].phase_unwrapped = responses[k].phase + offset;
  }
}

void check_grid(std::span<const double> grid) {
  if (grid.empty()) throw InvalidInput("detuning grid is empty");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!std::isfinite(grid[k])) throw InvalidInput("detuning grid contains a non-finite value");
    if (k > 0 && !(grid[k] > grid[k - 1])) {
      throw InvalidInput("detuning grid must be strictly increasing");
    }
  }
}

SpectrumGrid sweep(const SystemParams& p, std::span<const double> grid) {
  check_grid(grid);
  SpectrumGrid out;
  out.params = p;
  out.detunings.assign(grid.begin(), grid.end());
  out.responses.reserve(grid.size());
  for (double dw : grid) out.responses.push_back(reflection(p, dw));
  unwrap_phases(out.responses);
  return out;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 0) return out;
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) out[k] = lo + step * static_cast<double>(k);
  out[n - 1] = hi;
  return out;
}

void write_csv(std::ostream& out, const SpectrumGrid& grid) {
  out << "detuning_thz,re_r,im_r,reflectivity,phase_rad,phase_unwrapped_rad\n";
  char line[256];
  for (std::size_t k = 0; k < grid.detunings.size(); ++k) {
    const ComplexResponse& c = grid.responses[k];
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", grid.detunings[k],
                  c.r.real(), c.r.imag(), c.reflectivity, c.phase, c.phase_unwrapped);
    out << line;
  }
}

}  // namespace dit
