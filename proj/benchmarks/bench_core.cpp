#include "mwc/ledger.hpp"
#include "mwc/motives.hpp"
#include "mwc/scenario.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_Multiply(benchmark::State& state)
{
    const auto n = state.range(0);
    const mwc::Polynomial a = mwc::motives::projective(n) * mwc::motives::grassmannian(2, 15);
    for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_Multiply)->Arg(16)->Arg(128)->Arg(1024);

void BM_DivExact(benchmark::State& state)
{
    const mwc::Polynomial b = mwc::motives::grassmannian(3, 12);
    const mwc::Polynomial a = mwc::motives::hilb_p2(8) * b;
    for (auto _ : state) benchmark::DoNotOptimize(mwc::div_exact(a, b));
}
BENCHMARK(BM_DivExact);

void BM_HilbP2(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(mwc::motives::hilb_p2(state.range(0)));
}
BENCHMARK(BM_HilbP2)->Arg(3)->Arg(12)->Arg(40);

void BM_ParseBuiltin(benchmark::State& state)
{
    const std::string text = mwc::print_scenario(mwc::ledger::builtin_scenario_52());
    for (auto _ : state) benchmark::DoNotOptimize(mwc::parse_scenario(text));
}
BENCHMARK(BM_ParseBuiltin);

void BM_RunBuiltin(benchmark::State& state)
{
    const mwc::Scenario s = mwc::ledger::builtin_scenario_52();
    for (auto _ : state) benchmark::DoNotOptimize(mwc::run_scenario(s));
}
BENCHMARK(BM_RunBuiltin);

void BM_ReconstructC3(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(mwc::ledger::reconstruct_c3());
}
BENCHMARK(BM_ReconstructC3);

}  // namespace

BENCHMARK_MAIN();
