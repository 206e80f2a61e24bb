#include "ideals.hpp"

#include "vspread/betti.hpp"

#include <benchmark/benchmark.h>

using namespace vspread;

static void BM_BettiFormula(benchmark::State& state)
{
    const SpreadVector t({1, 0, 2});
    const MonomialIdeal I = bench::principal_ideal(static_cast<int>(state.range(0)), t);
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_table_formula(I, t));
    state.counters["generators"] = static_cast<double>(I.generators().size());
}
BENCHMARK(BM_BettiFormula)->Arg(6)->Arg(9)->Arg(12);

static void BM_OracleHomology(benchmark::State& state)
{
    const SpreadVector t({1, 0});
    const MonomialIdeal I = bench::principal_ideal(static_cast<int>(state.range(0)), t);
    const int q = default_oracle_degree(I, t);
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle_homology_dimension(I, q));
    state.counters["generators"] = static_cast<double>(I.generators().size());
}
BENCHMARK(BM_OracleHomology)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_VerifyHomologyBasis(benchmark::State& state)
{
    const SpreadVector t({1, 0, 2});
    const MonomialIdeal I = bench::principal_ideal(6, t);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_homology_basis(I, t, static_cast<int>(state.range(0)), 6));
}
BENCHMARK(BM_VerifyHomologyBasis)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
