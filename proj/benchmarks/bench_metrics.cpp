#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "citecredit/metrics.hpp"

namespace {

using namespace citecredit;

std::vector<CitationValue> random_values(std::size_t n) {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long long> cit(0, 5000);
    std::uniform_int_distribution<long long> rank(1, 8);
    std::vector<CitationValue> values;
    values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        values.emplace_back(cit(rng), rank(rng));
    }
    return values;
}

void BM_h_index(benchmark::State& state) {
    const auto values = random_values(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(h_index(values));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_h_index)->Range(16, 16384)->Complexity();

void BM_g_index(benchmark::State& state) {
    const auto values = random_values(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(g_index(values));
    }
}
BENCHMARK(BM_g_index)->Range(16, 16384);

void BM_index_report(benchmark::State& state) {
    const auto values = random_values(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(index_report(values, false));
    }
}
BENCHMARK(BM_index_report)->Range(64, 4096);

void BM_total_credit_curve(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(total_credit_curve(
            static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_total_credit_curve)->Arg(100)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
