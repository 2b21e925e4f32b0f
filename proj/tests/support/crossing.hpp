#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include "dit/spectrum.hpp"

namespace dit::testing {

// First detuning where the principal phase falls through +pi/2, linearly
// interpolated between grid points. Steps across the +-pi wrap are skipped.
inline double falling_half_pi_crossing(const SpectrumGrid& s) {
  constexpr double pi = std::numbers::pi;
  for (std::size_t k = 1; k < s.detunings.size(); ++k) {
    if (std::abs(s.responses[k].phase - s.responses[k - 1].phase) > pi) continue;
    const double a = s.responses[k - 1].phase - pi / 2;
    const double b = s.responses[k].phase - pi / 2;
    if (a > 0.0 && b <= 0.0) return s.detunings[k - 1] + a / (a - b) * (s.detunings[k] - s.detunings[k - 1]);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace dit::testing
