#include <benchmark/benchmark.h>

#include "circhad/correlation.hpp"
#include "circhad/hadsearch.hpp"
#include "circhad/schur.hpp"

#include <random>

using namespace circhad;

namespace {

BitSequence random_sequence(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> words((n + 63) / 64);
    for (auto& w : words) {
        w = rng();
    }
    return BitSequence::from_words(n, std::move(words));
}

void BM_AutocorrelationPopcount(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const BitSequence x = random_sequence(n, 1);
    for (auto _ : state) {
        std::int64_t total = 0;
        for (std::size_t k = 0; k < n; ++k) {
            total += autocorrelation_at(x, static_cast<std::int64_t>(k));
        }
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_AutocorrelationPopcount)->Arg(36)->Arg(100);

void BM_AutocorrelationSignedSum(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const BitSequence x = random_sequence(n, 1);
    for (auto _ : state) {
        std::int64_t total = 0;
        for (std::size_t k = 0; k < n; ++k) {
            total += periodic_correlation(x, x, static_cast<std::int64_t>(k));
        }
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_AutocorrelationSignedSum)->Arg(36)->Arg(100);

void BM_WeightClassEnumeration(benchmark::State& state) {
    for (auto _ : state) {
        WeightClassEnumerator e(18, 7);
        std::uint64_t count = 0;
        while (e.next()) {
            ++count;
        }
        benchmark::DoNotOptimize(count);
    }
    state.SetItemsProcessed(state.iterations() * 31824);
}
BENCHMARK(BM_WeightClassEnumeration);

void BM_SearchSplit(benchmark::State& state) {
    SearchConfig config;
    config.m = 3;
    config.splits = {SplitConstraint{Sign::minus, 3, 2, 13}};
    config.filters.half_shift_first = state.range(0) != 0;
    std::uint64_t tested = 0;
    for (auto _ : state) {
        const SearchReport r = search(config);
        tested += r.candidates_tested;
        benchmark::DoNotOptimize(r.found.size());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(tested));
}
BENCHMARK(BM_SearchSplit)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_StructureConstants(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        BigInt total = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = 0; j <= n; ++j) {
                for (std::size_t k = 0; k <= n; ++k) {
                    total += structure_constant(n, i, j, k);
                }
            }
        }
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_StructureConstants)->Arg(8)->Arg(36);

void BM_SearchSpaceSize(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_space_size(static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_SearchSpaceSize)->Arg(3)->Arg(5)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
