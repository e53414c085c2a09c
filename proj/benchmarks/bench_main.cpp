#include <benchmark/benchmark.h>

#include <quotcoh/formulas.hpp>
#include <quotcoh/oracle.hpp>
#include <quotcoh/sweep.hpp>

using namespace quotcoh;

namespace
{

const GradedDim mixed{{-1, 2}, {0, 3}, {1, 2}, {2, 3}};

void BM_SymPowerSeries(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(sym_power(mixed, state.range(0)));
    }
}
BENCHMARK(BM_SymPowerSeries)->DenseRange(2, 10, 4);

void BM_SymPowerOracle(benchmark::State &state)
{
    const auto basis = oracle::GradedBasis::from_dims(mixed);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::enumerate_sym(basis, state.range(0)));
    }
}
BENCHMARK(BM_SymPowerOracle)->DenseRange(2, 10, 4);

void BM_ExtPowerLarge(benchmark::State &state)
{
    const GradedDim big{{0, 200}, {1, 150}, {2, 100}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(ext_power(big, state.range(0)));
    }
}
BENCHMARK(BM_ExtPowerLarge)->Arg(10)->Arg(40);

void BM_ConjectureRhs(benchmark::State &state)
{
    const QuotContext ctx(CurveModel(2), BundleClass("E", 4, 0), state.range(0), {CohMode::generic});
    const auto l = BundleClass::line("L", 9);
    const std::vector<WedgeFactor> factors{{BundleClass::line("M1", 3), 1}, {BundleClass::line("M2", -1), 2}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(conjecture_rhs(ctx, l, 3, factors));
    }
}
BENCHMARK(BM_ConjectureRhs)->Arg(4)->Arg(16)->Arg(64);

void BM_ConsistencySweep(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(consistency_sweep());
    }
}
BENCHMARK(BM_ConsistencySweep)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
