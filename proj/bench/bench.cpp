#include <benchmark/benchmark.h>

#include "shufcompat/enriched.hpp"
#include "shufcompat/kernel.hpp"
#include "shufcompat/shuffle.hpp"

using namespace shufcompat;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_CertifyShuffleEpk(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(certify(Notion::shuffle, StatTag::Epk, 6, mode(state)).verdict);
    label(state);
}

void BM_CertifyHeadGraftDesMaj(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(certify(Notion::head_graft, StatTag::DesMaj, 6, mode(state)).verdict);
    label(state);
}

void BM_IdealEpkPrecLeft(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(is_op_ideal(StatTag::Epk, IdealOp::prec, Side::left, 5, mode(state)).holds);
    label(state);
}

void BM_GammaChain(benchmark::State& state) {
    auto spec = AlphabetSpec::make(AlphabetPreset::epk, 5);
    auto poset = chain_poset(Permutation{3, 1, 5, 2, 4});
    for (auto _ : state) benchmark::DoNotOptimize(gamma_poly(poset, spec, mode(state)));
    label(state);
}

void BM_EnumerateEnrichedAntichain(benchmark::State& state) {
    auto spec = AlphabetSpec::make(AlphabetPreset::petersen, 3);
    auto poset = make_poset(5, {}, {5, 2, 4, 1, 3});
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_enriched(poset, spec, mode(state)).size());
    label(state);
}

}  // namespace

BENCHMARK(BM_CertifyShuffleEpk)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyHeadGraftDesMaj)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdealEpkPrecLeft)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GammaChain)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateEnrichedAntichain)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
