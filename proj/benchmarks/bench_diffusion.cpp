#include "mcx/diffusion.hpp"

#include <benchmark/benchmark.h>

using namespace mcx;

static void BM_ConvolveBox(benchmark::State& state) {
    auto line = translation_action(1);
    auto mu = box_measure(1, state.range(0));
    SparseFunction f{{"0", 1}, {"1", -1}, {"7", 2}};
    for (auto _ : state) benchmark::DoNotOptimize(convolve(mu, f, line));
}
BENCHMARK(BM_ConvolveBox)->RangeMultiplier(4)->Range(4, 1024);

static void BM_DiffusePlane(benchmark::State& state) {
    auto plane = translation_action(2);
    SparseFunction f{{"0,0", 1}, {"1,2", -1}};
    Rational eps(1, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(diffuse_to_epsilon(plane, f, eps));
}
BENCHMARK(BM_DiffusePlane)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
