#include <benchmark/benchmark.h>

#include "avroot/average.hpp"
#include "avroot/local_factor.hpp"

namespace {

void BM_LocalFactorGe5(benchmark::State& state) {
  avroot::Int p = 97, s = 97 * 97 * 12;
  for (auto _ : state) {
    auto f = avroot::local_factor_ge5(p, s);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_LocalFactorGe5);

void BM_LocalFactor2(benchmark::State& state) {
  avroot::Int s = 448;  // nu_2 = 6
  for (auto _ : state) {
    auto f = avroot::local_factor_2(s);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_LocalFactor2);

void BM_Average(benchmark::State& state) {
  avroot::Int s = 7;
  avroot::Int cutoff = state.range(0);
  for (auto _ : state) {
    auto res = avroot::average_root_number(s, cutoff);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_Average)->Arg(1000)->Arg(10000)->Arg(100000);

}  // namespace
