#include "dit/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "dit/errors.hpp"
#include "dit/spectrum.hpp"

namespace dit {

namespace {

using cplx = std::complex<double>;

// Right-hand side of the linear mean-field equations with every constant
// folded in once.
struct MeanField {
  cplx cavity_rate;   // i dw + (gamma + kappa)/2
  cplx dipole_rate;   // i (dw + delta + S) + tau2/2
  cplx forcing;       // -sqrt(gamma) a_in
  cplx coupling;      // -i g1

  explicit MeanField(const OracleConfig& c) {
    const SystemParams& p = c.params;
    constexpr cplx i{0.0, 1.0};
    cavity_rate = i * c.drive_detuning + (p.gamma + p.kappa) / 2.0;
    dipole_rate = i * (cplx{c.drive_detuning + p.delta, 0.0} + c.effective_dipole_shift) + p.tau2 / 2.0;
    forcing = -std::sqrt(p.gamma) * c.drive_amplitude;
    coupling = -i * p.g1;
  }

  OracleState operator()(const OracleState& s) const {
    return {-cavity_rate * s.b + forcing + coupling * s.sigma, -dipole_rate * s.sigma + coupling * s.b};
  }

  void rk4_step(OracleState& s, double dt) const {
    const OracleState k1 = (*this)(s);
    const OracleState k2 = (*this)({s.b + 0.5 * dt * k1.b, s.sigma + 0.5 * dt * k1.sigma});
    const OracleState k3 = (*this)({s.b + 0.5 * dt * k2.b, s.sigma + 0.5 * dt * k2.sigma});
    const OracleState k4 = (*this)({s.b + dt * k3.b, s.sigma + dt * k3.sigma});
    s.b += dt / 6.0 * (k1.b + 2.0 * k2.b + 2.0 * k3.b + k4.b);
    s.sigma += dt / 6.0 * (k1.sigma + 2.0 * k2.sigma + 2.0 * k3.sigma + k4.sigma);
  }
};

void check_config(const OracleConfig& c) {
  const ValidationReport report = validate(c.params);
  if (!report.ok()) throw InvalidInput("oracle: " + report.failures.front());
  if (!std::isfinite(c.drive_detuning) || !std::isfinite(std::abs(c.drive_amplitude)) ||
      !std::isfinite(std::abs(c.effective_dipole_shift))) {
    throw InvalidInput("oracle: non-finite drive or dipole shift");
  }
  if (!(c.t_max > 0.0)) throw InvalidInput("oracle: t_max must be positive");
  if (!(c.convergence_tol > 0.0)) throw InvalidInput("oracle: convergence_tol must be positive");
  if (c.dt < 0.0 || std::isnan(c.dt)) throw InvalidInput("oracle: dt must be positive");
}

double resolve_dt(const OracleConfig& c) {
  const double limit = max_stable_dt(c);
  if (c.dt == 0.0) return limit;
  if (c.dt > limit) throw InvalidInput("oracle: dt exceeds the stability limit");
  return c.dt;
}

}  // namespace

double max_stable_dt(const OracleConfig& c) {
  const SystemParams& p = c.params;
  const double fastest = std::max({p.gamma + p.kappa, p.tau2, std::abs(c.drive_detuning), p.g1,
                                   std::abs(cplx{c.drive_detuning + p.delta, 0.0} + c.effective_dipole_shift)});
  return 0.01 / fastest;
}

OracleState evolve(const OracleConfig& config, double t_end) {
  check_config(config);
  if (!(t_end > 0.0)) throw InvalidInput("oracle: t_end must be positive");
  const double dt = resolve_dt(config);
  const MeanField rhs(config);

  OracleState state{};
  const auto steps = static_cast<std::size_t>(std::floor(t_end / dt));
  for (std::size_t k = 0; k < steps; ++k) rhs.rk4_step(state, dt);
  const double remainder = t_end - static_cast<double>(steps) * dt;
  if (remainder > 1e-12 * dt) rhs.rk4_step(state, remainder);
  return state;
}

OracleRun integrate(const OracleConfig& config) {
  check_config(config);
  OracleRun run;
  run.dt = resolve_dt(config);

  if (config.drive_amplitude == cplx{0.0, 0.0}) {
    run.degenerate = true;
    run.steady_r = {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
    run.warnings.emplace_back("zero input amplitude: reflection ratio undefined");
    return run;
  }
  const SystemParams& p = config.params;
  if (p.g1 > 0.0 && std::norm(config.drive_amplitude) > 0.1 * weak_excitation_bound(p)) {
    run.warnings.emplace_back("input flux exceeds 0.1 g1^2/gamma; mean-field closure is not reliable");
  }

  const MeanField rhs(config);
  const double window_time = 1.0 / (p.gamma + p.kappa);
  const auto window = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(window_time / run.dt)));
  const auto max_steps = static_cast<std::size_t>(std::ceil(config.t_max / run.dt));

  OracleState state{};
  cplx previous_b{0.0, 0.0};
  int quiet_windows = 0;
  run.residual = std::numeric_limits<double>::infinity();
  while (run.iterations < max_steps) {
    const std::size_t n = std::min(window, max_steps - run.iterations);
    for (std::size_t k = 0; k < n; ++k) rhs.rk4_step(state, run.dt);
    run.iterations += n;

    const double magnitude = std::abs(state.b);
    if (!std::isfinite(magnitude) || !std::isfinite(std::abs(state.sigma))) {
      run.residual = std::numeric_limits<double>::infinity();
      run.warnings.emplace_back("state diverged: net dipole damping is negative");
      break;
    }
    run.residual = magnitude > 0.0 ? std::abs(state.b - previous_b) / magnitude
                                   : std::numeric_limits<double>::infinity();
    previous_b = state.b;
    quiet_windows = run.residual <= config.convergence_tol ? quiet_windows + 1 : 0;
    if (quiet_windows >= 2) {
      run.converged = true;
      break;
    }
  }

  run.steady_b = state.b;
  run.steady_sigma = state.sigma;
  run.steady_r = 1.0 + std::sqrt(p.gamma) * state.b / config.drive_amplitude;
  return run;
}

double energy_balance(const OracleConfig& config, const OracleRun& run) {
  const SystemParams& p = config.params;
  const double input = std::norm(config.drive_amplitude);
  return std::norm(run.steady_r) +
         (p.kappa * std::norm(run.steady_b) + p.tau2 * std::norm(run.steady_sigma)) / input;
}

GridCheckReport oracle_grid_check(const SystemParams& params, std::span<const double> grid, double tol,
                                  const GridCheckOptions& options) {
  check_grid(grid);
  if (!(tol > 0.0)) throw InvalidInput("oracle_grid_check: tol must be positive");

  const AnalyticModel analytic =
      options.analytic ? options.analytic : [](const SystemParams& p, double dw, cplx shift) {
        return reflection(p, dw, shift).r;
      };

  GridCheckReport report;
  report.tol = tol;
  report.points.resize(grid.size());

  // Each worker claims grid indices and writes only its own slot.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < grid.size(); k = next++) {
      OracleConfig config;
      config.params = params;
      config.drive_detuning = grid[k];
      config.drive_amplitude = options.drive_amplitude;
      config.convergence_tol = options.convergence_tol;
      config.effective_dipole_shift = options.effective_dipole_shift;
      const OracleRun run = integrate(config);

      GridCheckPoint& point = report.points[k];
      point.detuning = grid[k];
      point.analytic_r = analytic(params, grid[k], options.effective_dipole_shift);
      point.oracle_r = run.steady_r;
      point.abs_dev = std::abs(point.oracle_r - point.analytic_r);
      point.converged = run.converged;
      point.energy_balance = energy_balance(config, run);
    }
  };

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(grid.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  report.pass = true;
  for (const GridCheckPoint& point : report.points) {
    report.max_dev = std::max(report.max_dev, std::isnan(point.abs_dev) ? std::numeric_limits<double>::infinity() : point.abs_dev);
    if (!point.converged || !(point.abs_dev <= tol)) report.pass = false;
  }
  return report;
}

}  // namespace dit
