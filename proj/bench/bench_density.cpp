// Serial reference vs OpenMP density-matrix kernel.
//
//   OMP_NUM_THREADS=4 ./polboost_bench

#include "polboost/wavepacket.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace polboost;

QuadratureGrid grid_for(const benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  return {n, n, 8.0};
}

void BM_reference(benchmark::State &state) {
  const auto grid = grid_for(state);
  const auto spec = PacketSpec::from_width(0.5);
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::effective_density_matrix(+1, 0.5, spec, grid));
  state.SetItemsProcessed(state.iterations() * grid.n_radial * grid.n_azimuthal);
}

void BM_parallel(benchmark::State &state) {
  const auto grid = grid_for(state);
  const auto spec = PacketSpec::from_width(0.5);
  for (auto _ : state)
    benchmark::DoNotOptimize(effective_density_matrix(+1, 0.5, spec, grid));
  state.SetItemsProcessed(state.iterations() * grid.n_radial * grid.n_azimuthal);
}

} // namespace

BENCHMARK(BM_reference)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_parallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond)->UseRealTime();

BENCHMARK_MAIN();
