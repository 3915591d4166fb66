#include <benchmark/benchmark.h>

#include "fairdiv/fairness.hpp"
#include "fairdiv/objective_solvers.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/path_solvers.hpp"
#include "fairdiv/random_instances.hpp"
#include "fairdiv/triangulation.hpp"

using namespace fairdiv;

namespace {

Instance interval_instance(int n, int m, SignClass cls, std::uint64_t seed) {
    Rng rng(seed);
    return random_interval_instance(rng, n, m, cls, 9);
}

Instance additive_instance(int n, int m, SignClass cls, std::uint64_t seed) {
    Rng rng(seed);
    return random_additive_instance(rng, n, m, cls, 9);
}

void BM_DpWidePath(benchmark::State& state) {
    Instance inst = interval_instance(3, static_cast<int>(state.range(0)), SignClass::NonNegative, 2026);
    for (auto _ : state) {
        DpResult r = solve_eq1p_gc_dp(inst);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_DpWidePath)->Arg(10)->Arg(25)->Arg(50);

void BM_SpernerEq1p(benchmark::State& state) {
    Instance inst = interval_instance(3, static_cast<int>(state.range(0)), SignClass::NonNegative, 7);
    for (auto _ : state) {
        SpernerSolveResult r = solve_eq1p_gc_sperner(inst);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_SpernerEq1p)->Arg(2)->Arg(3)->Arg(4);

void BM_CountFullyColored(benchmark::State& state) {
    Triangulation t{3, static_cast<int>(state.range(0))};
    for (auto _ : state) {
        Coloring col = random_special_coloring(t, 42);
        benchmark::DoNotOptimize(count_fully_colored(t, col));
    }
}
BENCHMARK(BM_CountFullyColored)->Arg(3)->Arg(5)->Arg(8);

void BM_LocalSearch(benchmark::State& state) {
    Instance inst = additive_instance(4, static_cast<int>(state.range(0)), SignClass::Objective, 99);
    for (auto _ : state) {
        LocalSearchResult r = local_search_eqxgc(inst);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_LocalSearch)->Arg(8)->Arg(12)->Arg(16);

void BM_GreedyHugePath(benchmark::State& state) {
    Instance inst = additive_instance(2, static_cast<int>(state.range(0)), SignClass::Objective, 5);
    for (auto _ : state) {
        GreedyResult r = greedy_eq1(inst);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_GreedyHugePath)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_OracleWellOrdered(benchmark::State& state) {
    Instance inst = interval_instance(3, static_cast<int>(state.range(0)), SignClass::NonNegative, 13);
    for (auto _ : state) {
        OracleResult r = exists_satisfying(inst, FairnessNotion::EQ1BorderPair,
                                           EnumerationScope::WellOrderedConnected);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_OracleWellOrdered)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
