#include "mcx/chain_complex.hpp"
#include "mcx/constructions.hpp"
#include "mcx/fixtures.hpp"
#include "mcx/homology.hpp"

#include <benchmark/benchmark.h>

using namespace mcx;

static void BM_ReducedComplexSphere(benchmark::State& state) {
    auto mc = special_sphere(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_reduced_chain_complex(mc));
}
BENCHMARK(BM_ReducedComplexSphere)->DenseRange(2, 6, 2);

static void BM_CoveringComplexSphere(benchmark::State& state) {
    auto mc = special_sphere(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_full_chain_complex(mc, -1, FullBasis::covering));
}
BENCHMARK(BM_CoveringComplexSphere)->DenseRange(1, 3);

static void BM_HomologyTorus(benchmark::State& state) {
    auto cc = build_reduced_chain_complex(fixtures::torus7());
    Ring ring = state.range(0) ? Ring::integers : Ring::rationals;
    for (auto _ : state) benchmark::DoNotOptimize(homology(cc, ring));
}
BENCHMARK(BM_HomologyTorus)->Arg(0)->Arg(1);

static void BM_HomologyProduct(benchmark::State& state) {
    auto p = product_with_interval(fixtures::torus7());
    auto cc = build_reduced_chain_complex(p.product);
    for (auto _ : state) benchmark::DoNotOptimize(homology(cc, Ring::integers));
}
BENCHMARK(BM_HomologyProduct)->Unit(benchmark::kMillisecond);
