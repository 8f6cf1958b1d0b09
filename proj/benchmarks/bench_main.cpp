#include <benchmark/benchmark.h>

#include "zetalab/afe.hpp"
#include "zetalab/duality.hpp"
#include "zetalab/eulermac.hpp"
#include "zetalab/primes.hpp"
#include "zetalab/zeros.hpp"
#include "zetalab/zetasum.hpp"

using namespace zetalab;

namespace {

const PrimeTable& table()
{
    static const PrimeTable t = build_prime_table(1'000'000);
    return t;
}

void BM_PrimeTable(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(build_prime_table(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_PrimeTable)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_ZetaEM(benchmark::State& state)
{
    const Complex z(0.5, static_cast<double>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(zeta_em_auto(z));
}
BENCHMARK(BM_ZetaEM)->Arg(20)->Arg(100)->Arg(1000);

void BM_ZetaEta(benchmark::State& state)
{
    const Complex z(0.5, static_cast<double>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(zeta_eta_regularized(z, 1e-12));
}
BENCHMARK(BM_ZetaEta)->Arg(20)->Arg(100);

void BM_HardyZ(benchmark::State& state)
{
    const HardyZ z(200.0);
    double t = 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(z(t));
        t = t < 190.0 ? t + 0.37 : 10.0;
    }
}
BENCHMARK(BM_HardyZ);

void BM_Superposition(benchmark::State& state)
{
    const auto& t = table();
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(superposition_value(1.0, t, n, 14.134725));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_Superposition)->Arg(10'000)->Arg(1'000'000);

void BM_ZeroScan(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(find_zeros(0.0, 100.0, 0.05, 1e-10, 1));
}
BENCHMARK(BM_ZeroScan)->Unit(benchmark::kMillisecond);

void BM_FracStatistic(benchmark::State& state)
{
    const auto zeros = find_zeros(0.0, 20.0, 0.05, 1e-10, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(frac_statistic(zeros, table(), Direction::K, 1, 100'000));
}
BENCHMARK(BM_FracStatistic)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
