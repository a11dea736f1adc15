#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "nlcl/nonlocal_operator.hpp"

namespace {

nlcl::CellField make_field(std::size_t n) {
  nlcl::Grid1D grid(-2.0, 3.0, n);
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> values(n);
  for (double& v : values) v = dist(rng);
  return nlcl::CellField(grid, std::move(values));
}

void BM_EvalWExponential(benchmark::State& state) {
  const auto q = make_field(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nlcl::eval_w_exponential(q, 1e-2));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvalWExponential)->Arg(1 << 10)->Arg(1 << 13)->Arg(1 << 16);

void BM_EvalWTabulated(benchmark::State& state) {
  const auto q = make_field(static_cast<std::size_t>(state.range(0)));
  const auto kernel = nlcl::KernelSpec::tabulated_bv(0.1, {0.2, 1.0, 0.6, 0.3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(nlcl::eval_w_tabulated(q, kernel));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvalWTabulated)->Arg(1 << 10)->Arg(1 << 13);

void BM_CheckIdentity(benchmark::State& state) {
  const auto q = make_field(static_cast<std::size_t>(state.range(0)));
  const auto w = nlcl::eval_w_exponential(q, 1e-2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nlcl::check_identity(q, w, 1e-2));
  }
}
BENCHMARK(BM_CheckIdentity)->Arg(1 << 13);

}  // namespace

BENCHMARK_MAIN();
