#include <benchmark/benchmark.h>

#include <random>

#include "detlinks/exec.hpp"
#include "detlinks/polar.hpp"
#include "detlinks/tensor_calculus.hpp"

using namespace detlinks;

namespace {

Exec exec_of(const benchmark::State& state) {
  return state.range(3) == 0 ? Exec::serial : Exec::parallel;
}

// Full profile from cold series caches: the cost of one fresh table cell.
void BM_PolarProfile(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const int r = static_cast<int>(state.range(2));
  const Exec exec = exec_of(state);
  for (auto _ : state) {
    state.PauseTiming();
    clear_series_cache();
    state.ResumeTiming();
    benchmark::DoNotOptimize(compute_polar_profile(m, n, r, exec));
  }
  const ProdSpec spec{r, n, m};
  state.counters["rank"] = static_cast<double>(ProdRing::get(spec)->size());
  state.counters["dim"] = spec.dimension();
  state.counters["threads"] = exec == Exec::serial ? 1 : jobs();
}

ProdClass dense_class(const ProdSpec& spec) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coeff(-1000, 1000);
  ProdClass c(spec);
  for (auto& x : c.mutable_coords()) x = coeff(rng);
  return c;
}

void BM_MulProd(benchmark::State& state) {
  const ProdSpec spec{static_cast<int>(state.range(2)), static_cast<int>(state.range(1)),
                     static_cast<int>(state.range(0))};
  const auto a = dense_class(spec);
  const auto b = dense_class(spec);
  mul_prod(a, b, Exec::serial);  // builds the structure tables outside the timing
  for (auto _ : state) benchmark::DoNotOptimize(mul_prod(a, b, exec_of(state)));
  state.counters["rank"] = static_cast<double>(a.ring().size());
}

void BM_TensorPowerSum(benchmark::State& state) {
  const ProdSpec spec{static_cast<int>(state.range(2)), static_cast<int>(state.range(1)),
                      static_cast<int>(state.range(0))};
  const auto a = dense_class(spec);
  const int k = spec.dimension() / 2;
  for (auto _ : state)
    benchmark::DoNotOptimize(apply_tensor_power_sum(a, TensorBundle::quot_tensor, k, exec_of(state)));
  state.counters["rank"] = static_cast<double>(a.ring().size());
  state.counters["k"] = k;
}

// Arguments are (m, n, r, parallel).
void profiles(benchmark::internal::Benchmark* b) {
  for (auto [m, n, r] : {std::tuple{5, 6, 2}, {6, 7, 5}, {3, 20, 2}, {6, 8, 3}, {7, 8, 4}})
    for (int par : {0, 1}) b->Args({m, n, r, par});
}

void products(benchmark::internal::Benchmark* b) {
  for (auto [m, n, r] : {std::tuple{5, 6, 2}, {6, 7, 3}})
    for (int par : {0, 1}) b->Args({m, n, r, par});
}

}  // namespace

BENCHMARK(BM_PolarProfile)->Apply(profiles)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulProd)->Apply(products)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TensorPowerSum)->Apply(profiles)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
