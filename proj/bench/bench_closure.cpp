#include <benchmark/benchmark.h>

#include "subdirekt/graded.hpp"
#include "subdirekt/witness.hpp"

namespace {

using namespace subdirekt;

void BM_closure_parallel(benchmark::State& state) {
  GeneratedSub g = build_sm({1, 2, 4, 9, 15});
  for (auto _ : state) {
    benchmark::DoNotOptimize(truncated_closure(g, state.range(0)));
  }
}

void BM_closure_serial(benchmark::State& state) {
  GeneratedSub g = build_sm({1, 2, 4, 9, 15});
  for (auto _ : state) {
    benchmark::DoNotOptimize(truncated_closure_serial(g, state.range(0)));
  }
}

void BM_closure_nxs_parallel(benchmark::State& state) {
  FiniteSemigroup null2(2, {0, 0, 0, 0});
  GeneratedSub g(Ambient::nxs(null2),
                 {GradedElement{1, {0}}, GradedElement{3, {1}},
                  GradedElement{5, {1}}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(truncated_closure(g, state.range(0)));
  }
}

void BM_closure_nxs_serial(benchmark::State& state) {
  FiniteSemigroup null2(2, {0, 0, 0, 0});
  GeneratedSub g(Ambient::nxs(null2),
                 {GradedElement{1, {0}}, GradedElement{3, {1}},
                  GradedElement{5, {1}}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(truncated_closure_serial(g, state.range(0)));
  }
}

}  // namespace

BENCHMARK(BM_closure_parallel)->Arg(20)->Arg(30)->Arg(40);
BENCHMARK(BM_closure_serial)->Arg(20)->Arg(30)->Arg(40);
BENCHMARK(BM_closure_nxs_parallel)->Arg(200)->Arg(400);
BENCHMARK(BM_closure_nxs_serial)->Arg(200)->Arg(400);

BENCHMARK_MAIN();
