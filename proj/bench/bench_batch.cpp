#include <benchmark/benchmark.h>

#include <random>

#include "citenorm/batch.hpp"

using namespace citenorm;

namespace {

std::vector<EvaluationSet> synthetic(std::size_t units) {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> size(20, 120);
    std::uniform_int_distribution<int> cites(0, 300);
    std::lognormal_distribution<double> rate(1.5, 1.0);
    std::vector<EvaluationSet> sets;
    sets.reserve(units);
    for (std::size_t u = 0; u < units; ++u) {
        EvaluationSet s{"u" + std::to_string(u), {}};
        const int n = size(rng);
        for (int i = 0; i < n; ++i) {
            RecordFields f;
            f.id = std::to_string(i);
            f.citations = static_cast<std::uint64_t>(cites(rng));
            f.jcs = rate(rng) + 0.01;
            f.fcs = rate(rng) + 0.01;
            s.records.push_back(make_record(f));
        }
        sets.push_back(std::move(s));
    }
    return sets;
}

const batch::EvaluationOptions kOptions{BasisSelection::Both, SelfCitationMode::Include};

void BM_EvaluateSerial(benchmark::State& state) {
    auto sets = synthetic(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(batch::evaluate_units_serial(sets, kOptions));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_EvaluateParallel(benchmark::State& state) {
    auto sets = synthetic(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(batch::evaluate_units(sets, kOptions));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SignedRankSerial(benchmark::State& state) {
    auto sets = synthetic(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(batch::test_units_against_unity_serial(sets, NormalizationBasis::Journal,
                                                                        SelfCitationMode::Include, 0.05));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SignedRankParallel(benchmark::State& state) {
    auto sets = synthetic(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            batch::test_units_against_unity(sets, NormalizationBasis::Journal, SelfCitationMode::Include, 0.05));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_EvaluateSerial)->Arg(232)->Arg(4096);
BENCHMARK(BM_EvaluateParallel)->Arg(232)->Arg(4096);
BENCHMARK(BM_SignedRankSerial)->Arg(232)->Arg(4096);
BENCHMARK(BM_SignedRankParallel)->Arg(232)->Arg(4096);

BENCHMARK_MAIN();
