#include "ideals.hpp"

#include "vspread/resolution.hpp"

#include <benchmark/benchmark.h>

using namespace vspread;

static void BM_BuildResolution(benchmark::State& state)
{
    const SpreadVector t({1, 1, 0});
    const MonomialIdeal I = bench::principal_ideal(static_cast<int>(state.range(0)), t);
    std::size_t entries = 0;
    for (auto _ : state) {
        const Resolution R = build_resolution(I, t);
        entries = 0;
        for (const auto& d : R.differentials)
            entries += d.nonzero_count();
        benchmark::DoNotOptimize(entries);
    }
    state.counters["entries"] = static_cast<double>(entries);
}
BENCHMARK(BM_BuildResolution)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_VerifyResolution(benchmark::State& state)
{
    const SpreadVector t({1, 0});
    const MonomialIdeal I = bench::principal_ideal(static_cast<int>(state.range(0)), t);
    const Resolution R = build_resolution(I, t);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_resolution(R, I, 6));
}
BENCHMARK(BM_VerifyResolution)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
