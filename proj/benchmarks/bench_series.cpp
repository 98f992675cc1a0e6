#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ovp/series.hpp"

namespace {

ovp::Series random_series(const ovp::Ring& ring, std::size_t order, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> c(order);
    for (auto& x : c) x = static_cast<std::int64_t>(rng() >> 2);
    return ovp::make_series(ring, c, order);
}

void BM_MulLazy(benchmark::State& state) {
    const auto ring = ovp::Ring::modular(std::uint64_t{1} << 40);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_series(ring, n, 1);
    const auto b = random_series(ring, n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(ovp::mul(a, b));
}

void BM_MulBaseline(benchmark::State& state) {
    const auto ring = ovp::Ring::modular(std::uint64_t{1} << 40);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_series(ring, n, 1);
    const auto b = random_series(ring, n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(ovp::mul_baseline(a, b));
}

void BM_MulExact(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_series(ovp::Ring::exact(), n, 1);
    const auto b = random_series(ovp::Ring::exact(), n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(ovp::mul(a, b));
}

}  // namespace

BENCHMARK(BM_MulLazy)->Arg(500)->Arg(2000)->Arg(8000);
BENCHMARK(BM_MulBaseline)->Arg(500)->Arg(2000)->Arg(8000);
BENCHMARK(BM_MulExact)->Arg(200)->Arg(800);
