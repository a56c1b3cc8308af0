// Benchmark: parallel exact rank against the serial reference it is tested
// with.  Inputs are seeded integer matrices, so runs are reproducible and
// the two kernels see identical work.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "detlab/linalg.hpp"
#include "detlab/rng.hpp"

namespace {

detlab::QMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    detlab::Rng rng(seed);
    detlab::QMatrix a(rows, detlab::QRow(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = rng.rat(-50, 50);
    return a;
}

void bm_rank_parallel(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const detlab::QMatrix a = random_matrix(n, n + 8, 1000 + n);
    for (auto _ : state) benchmark::DoNotOptimize(detlab::rank(a));
}

void bm_rank_serial(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const detlab::QMatrix a = random_matrix(n, n + 8, 1000 + n);
    for (auto _ : state) benchmark::DoNotOptimize(detlab::rank_serial(a));
}

} // namespace

BENCHMARK(bm_rank_parallel)->Arg(16)->Arg(32)->Arg(64)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_rank_serial)->Arg(16)->Arg(32)->Arg(64)->Arg(96)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
