#include <benchmark/benchmark.h>

#include <random>

#include "nlcl/flux.hpp"
#include "nlcl/local_solver.hpp"
#include "nlcl/nonlocal_solver.hpp"

namespace {

nlcl::SimConfig panel_config(std::size_t n, double eta) {
  return nlcl::make_sim_config(
      nlcl::build_grid(-2.0, 3.0, static_cast<long long>(n)),
      nlcl::InitialDatum({-0.5, 0.0, 0.5}, {-0.5, 1.0}),
      nlcl::KernelSpec::exponential(eta), nlcl::VelocityModel::identity(),
      /*t_end=*/0.1, /*cfl=*/0.5, /*snapshot_times=*/{0.1}, /*snapshot_stride=*/1u << 30);
}

void BM_NonlocalStep(benchmark::State& state) {
  const auto config = panel_config(static_cast<std::size_t>(state.range(0)), 1e-2);
  const auto initial = nlcl::nonlocal_initial_state(config);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nlcl::nonlocal_step(initial, config));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NonlocalStep)->Arg(1 << 10)->Arg(1 << 13)->Arg(1 << 16);

void BM_RunNonlocal(benchmark::State& state) {
  const auto config = panel_config(2945, 1e-2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nlcl::run_nonlocal(config));
  }
}
BENCHMARK(BM_RunNonlocal)->Unit(benchmark::kMillisecond);

void BM_RunLocalReference(benchmark::State& state) {
  auto config = panel_config(static_cast<std::size_t>(state.range(0)), 1e-2);
  config.kernel.reset();
  for (auto _ : state) {
    benchmark::DoNotOptimize(nlcl::run_local(config));
  }
}
BENCHMARK(BM_RunLocalReference)->Arg(2945)->Arg(2945 * 8)->Unit(benchmark::kMillisecond);

void BM_GodunovFlux(benchmark::State& state) {
  const nlcl::FluxFunction flux(nlcl::VelocityModel::square());
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nlcl::godunov_flux(dist(rng), dist(rng), flux));
  }
}
BENCHMARK(BM_GodunovFlux);

void BM_PreparedGodunovFlux(benchmark::State& state) {
  const nlcl::FluxFunction flux(nlcl::VelocityModel::square());
  const nlcl::PreparedGodunovFlux prepared(flux, -1.1, 1.1);
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(prepared(dist(rng), dist(rng)));
  }
}
BENCHMARK(BM_PreparedGodunovFlux);

}  // namespace

BENCHMARK_MAIN();
