#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include <json.hpp>

#include "dit/errors.hpp"
#include "dit/stark.hpp"
#include "support/crossing.hpp"
#include "support/generators.hpp"

namespace dit {
namespace {

constexpr double pi = std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();

// 40-digit evaluation of S at g2 = 0.3, n = 1, Delta = -1.8, tau3 = 0.001.
constexpr double kShiftMinus6g = -0.099999992283951212658085443048962727704;
constexpr double kLossMinus6g = 0.000027777775634430892405023734180267424;
// Phase at dw = 0 with that shift applied (literal loss sign).
constexpr double kKerrPhaseMinus6g = 2.5585261173402015605014577417775107364;

TEST(CavityAmplitudeRatio, ResonantDriveIsExactlyBroadband) {
  SystemParams p = paper_defaults();
  const double detuning = p.omega0 - p.nu;
  const CavityAmplitudeRatio ratio = cavity_amplitude_ratio(p, detuning);
  EXPECT_DOUBLE_EQ(ratio.exact.real(), -1.0 / std::sqrt(p.gamma));
  EXPECT_EQ(ratio.exact.imag(), 0.0);
  EXPECT_NEAR(ratio.relative_error, 0.0, 1e-15);
}

TEST(CavityAmplitudeRatio, DetunedByGamma) {
  SystemParams p = paper_defaults();
  // omega0 - nu - Delta = gamma
  const CavityAmplitudeRatio ratio = cavity_amplitude_ratio(p, p.omega0 - p.nu - p.gamma);
  const std::complex<double> expected = -std::sqrt(p.gamma) * std::complex<double>(1.0, -1.0) / (2.0 * p.gamma);
  EXPECT_NEAR(std::abs(ratio.exact - expected), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(ratio.exact), 1.0 / std::sqrt(2.0 * p.gamma), 1e-15);
}

TEST(CavityAmplitudeRatio, ApproachesBroadbandForLargeGamma) {
  SystemParams p = paper_defaults();
  double previous = inf;
  for (double gamma : {1.0, 10.0, 100.0, 1e4, 1e6}) {
    p.gamma = gamma;
    const double err = cavity_amplitude_ratio(p, -1.0).relative_error;
    EXPECT_LT(err, previous);
    previous = err;
  }
  EXPECT_LT(previous, 1e-5);
  p.gamma = 0.0;
  EXPECT_THROW(cavity_amplitude_ratio(p, 0.0), InvalidInput);
}

TEST(StarkOperator, FarDetunedShift) {
  const StarkValue v = stark_operator(paper_defaults(), StarkDrive::photons(-1.8, 1.0));
  EXPECT_NEAR(v.shift(), kShiftMinus6g, 1e-16);
  EXPECT_NEAR(v.two_photon_loss(), kLossMinus6g, 1e-19);
  const double limit = 2.0 * 0.09 / -1.8;
  EXPECT_LE(std::abs(v.shift() - limit) / std::abs(limit), 0.001 * 0.001 / (4.0 * 1.8 * 1.8) * (1 + 1e-9));
}

TEST(StarkOperator, NoPhotonsNoShift) {
  EXPECT_EQ(stark_operator(paper_defaults(), StarkDrive::photons(-1.8, 0.0)).s, std::complex<double>(0.0, 0.0));
}

TEST(StarkOperator, ResonantDriveIsPureLoss) {
  const SystemParams p = paper_defaults();
  const StarkValue v = stark_operator(p, StarkDrive::photons(0.0, 1.0));
  EXPECT_EQ(v.shift(), 0.0);
  EXPECT_NEAR(v.two_photon_loss(), 2.0 * 0.09 / (0.001 / 2.0), 1e-9);
  EXPECT_GT(v.two_photon_loss(), 0.0);
}

TEST(StarkOperator, SingularAndInvalidInputs) {
  SystemParams p = paper_defaults();
  p.tau3 = 0.0;
  EXPECT_THROW(stark_operator(p, StarkDrive::photons(0.0, 1.0)), SingularInput);
  EXPECT_THROW(stark_operator(paper_defaults(), StarkDrive::photons(-1.0, -1.0)), InvalidInput);
  EXPECT_THROW(stark_operator(paper_defaults(), StarkDrive::photons(std::nan(""), 1.0)), InvalidInput);
}

TEST(StarkOperator, InfiniteDetuningIsNoField) {
  EXPECT_EQ(stark_operator(paper_defaults(), StarkDrive::none()).s, std::complex<double>(0.0, 0.0));
  EXPECT_EQ(stark_operator(paper_defaults(), StarkDrive::photons(-inf, 5.0)).s, std::complex<double>(0.0, 0.0));
}

TEST(StarkOperator, FluxModeUsesFluxOverGamma) {
  const SystemParams p = paper_defaults();
  const StarkValue from_flux = stark_operator(p, StarkDrive::flux(-1.8, p.gamma * 2.0));
  const StarkValue from_n = stark_operator(p, StarkDrive::photons(-1.8, 2.0));
  EXPECT_NEAR(std::abs(from_flux.s - from_n.s), 0.0, 1e-15);
}

TEST(StarkOperator, LinearInPhotonNumberProperty) {
  testing::ParamGenerator gen(31);
  for (int k = 0; k < 5000; ++k) {
    const SystemParams p = gen.resonant();
    const double delta = gen.uniform(-10.0, 10.0);
    const double n = gen.log_uniform(1e-3, 1e3);
    const std::complex<double> one = stark_operator(p, StarkDrive::photons(delta, 1.0)).s;
    const std::complex<double> many = stark_operator(p, StarkDrive::photons(delta, n)).s;
    ASSERT_LE(std::abs(many - n * one), 1e-14 * std::abs(many));
  }
}

TEST(StarkOperator, FarDetunedBoundProperty) {
  testing::ParamGenerator gen(32);
  for (int k = 0; k < 10000; ++k) {
    SystemParams p = gen.resonant();
    p.tau3 = gen.log_uniform(1e-6, 1.0);
    const double sign = gen.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
    const double delta = sign * gen.log_uniform(1e-3, 1e3);
    const double n = gen.log_uniform(0.1, 10.0);
    const StarkValue v = stark_operator(p, StarkDrive::photons(delta, n));
    const double limit = 2.0 * p.g2 * p.g2 * n / delta;
    const double bound = p.tau3 * p.tau3 / (4.0 * delta * delta);
    ASSERT_LE(std::abs(v.shift() - limit) / std::abs(limit), bound * (1.0 + 1e-9) + 1e-15);
    ASSERT_EQ(std::signbit(v.shift()), std::signbit(delta));
    ASSERT_GE(v.two_photon_loss(), 0.0);
  }
}

TEST(ShiftedReflection, NoFieldMatchesBareSpectrumBitForBit) {
  testing::ParamGenerator gen(33);
  for (int k = 0; k < 500; ++k) {
    const SystemParams p = gen.detuned();
    const double dw = gen.uniform(-3.0, 3.0);
    EXPECT_EQ(shifted_reflection(p, StarkDrive::none(), dw).r, reflection(p, dw).r);
  }
}

TEST(ShiftedReflection, SinglePhotonFlipsResonantPhase) {
  const SystemParams p = paper_defaults();
  const double with_field = shifted_reflection(p, StarkDrive::photons(-6.0 * p.g2, 1.0), 0.0).phase;
  const double without = shifted_reflection(p, StarkDrive::none(), 0.0).phase;
  EXPECT_NEAR(with_field, kKerrPhaseMinus6g, 1e-9);
  EXPECT_GE(std::abs(with_field - without), 0.75 * pi);
}

TEST(ShiftedReflection, AbsorptiveSignConjugatesShift) {
  const SystemParams p = paper_defaults();
  const StarkDrive drive = StarkDrive::photons(-0.5, 1.0);
  const StarkValue v = stark_operator(p, drive);
  EXPECT_EQ(shifted_reflection(p, drive, 0.01, LossSign::Absorptive).r, reflection(p, 0.01, std::conj(v.s)).r);
  EXPECT_EQ(shifted_reflection(p, drive, 0.01, LossSign::Literal).r, reflection(p, 0.01, v.s).r);
}

TEST(ShiftedReflection, MinimumDetuningShiftAlgebra) {
  const SystemParams p = paper_defaults();
  const double delta = (p.gamma + p.kappa) / 2.0;
  const StarkValue v = stark_operator(p, StarkDrive::photons(-delta, 1.0));
  // Exact value of the formula at |Delta| = (gamma + kappa)/2.
  const double exact = 4.0 * p.g2 * p.g2 / (p.gamma + p.kappa) /
                       (1.0 + p.tau3 * p.tau3 / ((p.gamma + p.kappa) * (p.gamma + p.kappa)));
  EXPECT_NEAR(std::abs(v.shift()), exact, 1e-15);
  EXPECT_LT(v.shift(), 0.0);
}

TEST(KerrSweep, RejectsEmptyInputs) {
  const std::vector<StarkDrive> none;
  const std::vector<double> grid = linspace(-1.0, 1.0, 11);
  EXPECT_THROW(kerr_sweep(paper_defaults(), none, grid), InvalidInput);
  const std::vector<StarkDrive> one{StarkDrive::none()};
  EXPECT_THROW(kerr_sweep(paper_defaults(), one, std::vector<double>{}), InvalidInput);
}

TEST(KerrSweep, NoFieldEqualsSpectrumSweep) {
  const std::vector<double> grid = linspace(-1.0, 1.0, 2001);
  const std::vector<StarkDrive> drives{StarkDrive::none()};
  const auto curves = kerr_sweep(paper_defaults(), drives, grid);
  const SpectrumGrid reference = sweep(paper_defaults(), grid);
  ASSERT_EQ(curves.size(), 1u);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    ASSERT_EQ(curves[0].responses[k].r, reference.responses[k].r);
    ASSERT_EQ(curves[0].responses[k].phase_unwrapped, reference.responses[k].phase_unwrapped);
  }
}

TEST(KerrSweep, CurvesTranslateByStarkShift) {
  const SystemParams p = paper_defaults();
  const double g = p.g2;
  const std::vector<double> grid = linspace(-1.0, 1.0, 2001);
  const std::vector<StarkDrive> drives{StarkDrive::none(), StarkDrive::photons(-20 * g, 1),
                                       StarkDrive::photons(-10 * g, 1), StarkDrive::photons(-6 * g, 1)};
  const auto curves = kerr_sweep(p, drives, grid);
  const double base = testing::falling_half_pi_crossing(curves[0]);
  ASSERT_TRUE(std::isfinite(base));
  for (std::size_t k = 1; k < drives.size(); ++k) {
    // The literal detuning convention moves the curve by -Re(S).
    const double crossing = testing::falling_half_pi_crossing(curves[k]);
    ASSERT_TRUE(std::isfinite(crossing)) << k;
    const double displacement = crossing - base;
    const double expected = -2.0 * g * g / drives[k].detuning;
    EXPECT_NEAR(displacement, expected, 0.1 * std::abs(expected)) << "Delta = " << drives[k].detuning;
  }
}

TEST(KerrSweep, TwoPhotonsShiftTwiceAsFar) {
  const SystemParams p = paper_defaults();
  const double g = p.g2;
  const std::vector<double> grid = linspace(-1.0, 1.0, 2001);
  const std::vector<StarkDrive> drives{StarkDrive::none(), StarkDrive::photons(-20 * g, 1),
                                       StarkDrive::photons(-20 * g, 2)};
  const auto curves = kerr_sweep(p, drives, grid);
  const double base = testing::falling_half_pi_crossing(curves[0]);
  const double one = testing::falling_half_pi_crossing(curves[1]) - base;
  const double two = testing::falling_half_pi_crossing(curves[2]) - base;
  EXPECT_NEAR(two / one, 2.0, 0.1);
}

TEST(KerrSweep, ReflectivityDipFollowsShift) {
  SystemParams p = paper_defaults();
  p.g1 = 0.03;  // absorptive regime: a clear reflectivity minimum at the dipole
  const std::vector<double> grid = linspace(-1.0, 1.0, 2001);
  const double step = grid[1] - grid[0];
  const std::vector<StarkDrive> drives{StarkDrive::none(), StarkDrive::photons(-6 * p.g2, 1),
                                       StarkDrive::photons(-10 * p.g2, 1), StarkDrive::photons(20 * p.g2, 1)};
  const auto curves = kerr_sweep(p, drives, grid);
  auto argmin = [](const SpectrumGrid& s) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < s.responses.size(); ++k) {
      if (s.responses[k].reflectivity < s.responses[best].reflectivity) best = k;
    }
    return s.detunings[best];
  };
  const double base = argmin(curves[0]);
  for (std::size_t k = 1; k < drives.size(); ++k) {
    const double moved = argmin(curves[k]) - base;
    EXPECT_NEAR(moved, -stark_operator(p, drives[k]).shift(), step) << k;
  }
}

TEST(StarkSidecar, RecordsDriveAndComplexShift) {
  const SystemParams p = paper_defaults();
  const auto doc = nlohmann::json::parse(stark_sidecar_json(p, StarkDrive::photons(-1.8, 1.0)));
  EXPECT_EQ(doc["drive"]["Delta"].get<double>(), -1.8);
  EXPECT_EQ(doc["drive"]["n_photons"].get<double>(), 1.0);
  EXPECT_EQ(doc["S"]["re"].get<double>(), stark_operator(p, StarkDrive::photons(-1.8, 1.0)).shift());
  EXPECT_EQ(doc["loss_sign"], "literal");

  const auto off = nlohmann::json::parse(stark_sidecar_json(p, StarkDrive::none()));
  EXPECT_EQ(off["drive"]["Delta"], "inf");
  EXPECT_EQ(off["S"]["re"].get<double>(), 0.0);

  const auto flux = nlohmann::json::parse(stark_sidecar_json(p, StarkDrive::flux(-1.8, 12.0)));
  EXPECT_EQ(flux["drive"]["mode"], "input-flux");
  EXPECT_EQ(flux["drive"]["photon_number"].get<double>(), 2.0);
}

}  // namespace
}  // namespace dit
