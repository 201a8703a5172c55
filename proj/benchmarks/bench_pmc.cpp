#include <benchmark/benchmark.h>

#include "pmc/ext.hpp"
#include "pmc/moduli.hpp"
#include "pmc/normal_form.hpp"

using namespace pmc;

static void BM_Multiply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RingParams P{n, 32, 3};
    RingElem f = parse_elem("1+x+2*x^3*y+x^5+y", P), g = parse_elem("x^2+2*y+x*y^2", P);
    for (auto _ : state) benchmark::DoNotOptimize(multiply(f, g));
}
BENCHMARK(BM_Multiply)->Arg(2)->Arg(4)->Arg(8);

static void BM_Indices(benchmark::State& state) {
    const int b = static_cast<int>(state.range(0));
    GeneralNormalForm nf{4, {b / 2, b, 2 * b}, {}};
    ModuleRep M = ideal_from_indices(nf, RingParams{4, min_precision(4, 2 * b), 2});
    for (auto _ : state) benchmark::DoNotOptimize(indices(M));
}
BENCHMARK(BM_Indices)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_IndicesByDefinition(benchmark::State& state) {
    GeneralNormalForm nf{4, {1, 2, 2}, {}};
    ModuleRep M = ideal_from_indices(nf, RingParams{4, min_precision(4, 2), 2});
    for (auto _ : state) benchmark::DoNotOptimize(indices_by_definition(M));
}
BENCHMARK(BM_IndicesByDefinition)->Unit(benchmark::kMillisecond);

static void BM_IsomorphismOracle(benchmark::State& state) {
    RingParams P{3, 14, 3};
    ModuleRep a = ideal_from_text(P, {"x^2+y", "x*y", "y^2"});
    ModuleRep b = ideal_from_text(P, {"x^2", "x*y", "y^2"});
    for (auto _ : state) benchmark::DoNotOptimize(is_isomorphic_oracle(a, b));
}
BENCHMARK(BM_IsomorphismOracle)->Unit(benchmark::kMillisecond);

static void BM_LocalExt1(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SpecialNormalForm nf{n, 3, n / 2, {}};
    ModuleRep M = special_ideal(nf, RingParams{n, min_precision(n, 3), 2});
    for (auto _ : state) benchmark::DoNotOptimize(local_ext1_length(M));
}
BENCHMARK(BM_LocalExt1)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_EnumerateComponents(benchmark::State& state) {
    CurveParams cp{4, 2, state.range(0), 1};
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_components(cp));
}
BENCHMARK(BM_EnumerateComponents)->DenseRange(1, 6);

static void BM_Connectivity(benchmark::State& state) {
    CurveParams cp{4, 2, state.range(0), 1};
    for (auto _ : state) benchmark::DoNotOptimize(connectivity(cp));
}
BENCHMARK(BM_Connectivity)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
