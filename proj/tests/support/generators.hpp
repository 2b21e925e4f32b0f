#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "dit/params.hpp"

namespace dit::testing {

// Seeded parameter generator for property tests. Rates are drawn
// log-uniformly so that both weak and strong coupling regimes appear.
class ParamGenerator {
 public:
  explicit ParamGenerator(std::uint64_t seed) : rng_(seed) {}

  double log_uniform(double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng_));
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  // Valid, passive, delta = 0.
  SystemParams resonant() {
    SystemParams p = paper_defaults();
    p.gamma = log_uniform(1e-2, 20.0);
    p.kappa = uniform(0.0, 1.0) < 0.1 ? 0.0 : log_uniform(1e-4, 20.0);
    p.tau2 = log_uniform(1e-4, 2.0);
    p.tau3 = log_uniform(1e-4, 2.0);
    p.g1 = uniform(0.0, 1.0) < 0.05 ? 0.0 : log_uniform(1e-4, 3.0);
    p.g2 = log_uniform(1e-3, 3.0);
    p.delta = 0.0;
    return p;
  }

  SystemParams detuned() {
    SystemParams p = resonant();
    p.delta = uniform(-0.9, 0.9) * (p.gamma + p.kappa);
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace dit::testing
