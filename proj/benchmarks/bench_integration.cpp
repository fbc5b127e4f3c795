#include <benchmark/benchmark.h>

#include "avroot/padic_integration.hpp"

namespace {

void BM_AdaptiveOracle(benchmark::State& state) {
  avroot::Int p = state.range(0), s = 2;
  auto eval = avroot::modified_root_evaluator(s, p);
  for (auto _ : state) {
    auto est = avroot::integrate_adaptive(eval, p, 3, 12);
    benchmark::DoNotOptimize(est);
  }
}
BENCHMARK(BM_AdaptiveOracle)->Arg(5)->Arg(13)->Arg(23);

void BM_ShellMeasure(benchmark::State& state) {
  avroot::Int p = 13, s = 1;
  for (auto _ : state) {
    auto m = avroot::equal_shell_measure_bruteforce(p, s, static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_ShellMeasure)->Arg(0)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
