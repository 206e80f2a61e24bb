#include "vspread/spread_ops.hpp"

#include <benchmark/benchmark.h>

using namespace vspread;

static void BM_EnumerateSpread(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const SpreadVector t({1, 0, 2, 1});
    std::size_t count = 0;
    for (auto _ : state) {
        const auto m = enumerate_spread_monomials(n, 5, t);
        count = m.size();
        benchmark::DoNotOptimize(m.data());
    }
    state.counters["monomials"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateSpread)->Arg(8)->Arg(12)->Arg(16);

static void BM_CountSpread(benchmark::State& state)
{
    const SpreadVector t({1, 0, 2, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(count_spread_monomials(static_cast<int>(state.range(0)), 5, t));
}
BENCHMARK(BM_CountSpread)->Arg(16)->Arg(64);

static void BM_UnspreadRoundTrip(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const SpreadVector t({2, 1, 1});
    const auto gens = enumerate_spread_monomials(n, 4, t);
    const SpreadMap down = SpreadMap::unspread(t);
    for (auto _ : state)
        for (const auto& u : gens)
            benchmark::DoNotOptimize(apply_spread_map(down.inverse(), apply_spread_map(down, u), n));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(gens.size()));
}
BENCHMARK(BM_UnspreadRoundTrip)->Arg(10)->Arg(14);
