#include "mcx/constructions.hpp"
#include "mcx/fixtures.hpp"
#include "mcx/norms.hpp"

#include <benchmark/benchmark.h>

using namespace mcx;

static void BM_VolumeTorus(benchmark::State& state) {
    auto mc = fixtures::torus7();
    for (auto _ : state) benchmark::DoNotOptimize(simplicial_volume(mc));
}
BENCHMARK(BM_VolumeTorus)->Unit(benchmark::kMillisecond);

static void BM_VolumeSphere(benchmark::State& state) {
    auto mc = special_sphere(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(simplicial_volume(mc));
}
BENCHMARK(BM_VolumeSphere)->DenseRange(1, 4);

static void BM_NoisogBruteForce(benchmark::State& state) {
    auto fx = fixtures::noisog();
    for (auto _ : state) benchmark::DoNotOptimize(integral_seminorm_bruteforce(fx.full, fx.full_cycle, 3, 3));
}
BENCHMARK(BM_NoisogBruteForce)->Unit(benchmark::kMillisecond);
