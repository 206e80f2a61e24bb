#include "ideals.hpp"

#include "vspread/gin.hpp"
#include "vspread/groebner.hpp"

#include <benchmark/benchmark.h>

using namespace vspread;

static void BM_GinOfSpreadIdeal(benchmark::State& state)
{
    const SpreadVector t({1, 0});
    const MonomialIdeal I = bench::principal_ideal(static_cast<int>(state.range(0)), t);
    std::uint64_t seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(gin(I, {seed++, 100, 3}));
    state.counters["generators"] = static_cast<double>(I.generators().size());
}
BENCHMARK(BM_GinOfSpreadIdeal)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_BuchbergerAfterChange(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const MonomialIdeal I(n, {Monomial(n, {1, n}), Monomial(n, {2, 2})});
    std::mt19937_64 rng(7);
    const CoordinateChange g = CoordinateChange::random(n, 100, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(initial_ideal_after(I, g));
}
BENCHMARK(BM_BuchbergerAfterChange)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
