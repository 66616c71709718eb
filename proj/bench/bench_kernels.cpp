// Serial reference vs OpenMP kernels on the grids the library scans.

#include <benchmark/benchmark.h>

#include <vector>

#include "qiquad/integrand.hpp"
#include "qiquad/kernels.hpp"
#include "qiquad/peano.hpp"
#include "qiquad/spline_qi.hpp"

namespace {

using namespace qiquad;

std::vector<double> grid(std::size_t count) {
  std::vector<double> x(count);
  for (std::size_t i = 0; i < count; ++i) x[i] = static_cast<double>(i) / static_cast<double>(count - 1);
  return x;
}

template <bool Parallel>
void BM_EvaluateBuiltin(benchmark::State& state) {
  const auto f = builtin("f2");
  const auto x = grid(static_cast<std::size_t>(state.range(0)));
  std::vector<double> out(x.size());
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::parallel::evaluate(f.eval, x, out);
    } else {
      kernels::serial::evaluate(f.eval, x, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_LebesgueScan(benchmark::State& state) {
  const QuasiInterpolant q(Partition::uniform(0, 1, static_cast<int>(state.range(0))));
  const auto x = lebesgue_grid(q.partition(), 40);
  const RealFunction lambda = [&q](double t) { return q.lebesgue(t); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? kernels::parallel::max_value(lambda, x)
                                      : kernels::serial::max_value(lambda, x));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(x.size()));
}

template <bool Parallel>
void BM_KernelSamples(benchmark::State& state) {
  const PeanoKernel k(64);
  const auto x = grid(static_cast<std::size_t>(state.range(0)));
  const RealFunction kernel = [&k](double t) { return k(t); };
  std::vector<double> out(x.size());
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::parallel::evaluate(kernel, x, out);
    } else {
      kernels::serial::evaluate(kernel, x, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_EvaluateBuiltin<false>)->RangeMultiplier(16)->Range(256, 1 << 20);
BENCHMARK(BM_EvaluateBuiltin<true>)->RangeMultiplier(16)->Range(256, 1 << 20);
BENCHMARK(BM_LebesgueScan<false>)->Arg(20)->Arg(200)->Arg(2000);
BENCHMARK(BM_LebesgueScan<true>)->Arg(20)->Arg(200)->Arg(2000);
BENCHMARK(BM_KernelSamples<false>)->Arg(1000)->Arg(100000);
BENCHMARK(BM_KernelSamples<true>)->Arg(1000)->Arg(100000);

BENCHMARK_MAIN();
