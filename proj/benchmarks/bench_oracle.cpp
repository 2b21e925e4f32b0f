#include <benchmark/benchmark.h>

#include "dit/oracle.hpp"

namespace {

// Steady-state cost grows as the dipole-like mode slows down (smaller g1).
void BM_IntegrateResonant(benchmark::State& state) {
  dit::OracleConfig config;
  config.params.g1 = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) {
    const dit::OracleRun run = dit::integrate(config);
    benchmark::DoNotOptimize(run.steady_r);
    state.counters["steps"] = static_cast<double>(run.iterations);
  }
}
BENCHMARK(BM_IntegrateResonant)->Arg(0)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Evolve(benchmark::State& state) {
  dit::OracleConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dit::evolve(config, 100.0));
  }
}
BENCHMARK(BM_Evolve)->Unit(benchmark::kMillisecond);

}  // namespace
