#include <benchmark/benchmark.h>

#include <vector>

#include "dit/spectrum.hpp"
#include "dit/stark.hpp"

namespace {

void BM_Reflection(benchmark::State& state) {
  const dit::SystemParams p = dit::paper_defaults();
  double dw = -1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dit::reflection(p, dw));
    dw += 1e-6;
  }
}
BENCHMARK(BM_Reflection);

void BM_Sweep(benchmark::State& state) {
  const dit::SystemParams p = dit::paper_defaults();
  const std::vector<double> grid = dit::linspace(-3.0, 3.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dit::sweep(p, grid));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sweep)->Arg(201)->Arg(2001)->Arg(20001);

void BM_KerrSweep(benchmark::State& state) {
  const dit::SystemParams p = dit::paper_defaults();
  const std::vector<double> grid = dit::linspace(-1.0, 1.0, 2001);
  const double g = p.g2;
  const std::vector<dit::StarkDrive> drives{dit::StarkDrive::none(), dit::StarkDrive::photons(-20 * g, 1),
                                            dit::StarkDrive::photons(-10 * g, 1),
                                            dit::StarkDrive::photons(-6 * g, 1)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dit::kerr_sweep(p, drives, grid));
  }
}
BENCHMARK(BM_KerrSweep);

}  // namespace
