#include <benchmark/benchmark.h>

#include "ovp/eta.hpp"
#include "ovp/theta.hpp"

namespace {

void BM_OverpartitionGf(benchmark::State& state) {
    const auto ring = ovp::Ring::modular(32);
    const auto t = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ovp::overpartition_gf(t, ring, 2000));
}

void BM_OverpartitionGfReference(benchmark::State& state) {
    const auto ring = ovp::Ring::modular(32);
    const auto q = ovp::overpartition_quotient(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ovp::expand_eta_quotient_reference(q, ring, 2000));
}

// one factor applied by repeated pentagonal passes vs one dense power
void BM_EulerPowerSparse(benchmark::State& state) {
    const auto ring = ovp::Ring::modular(1024);
    const auto one = ovp::Series::one(ring, 4000);
    const auto e = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(ovp::apply_euler_power(one, 1, e));
}

void BM_EulerPowerDense(benchmark::State& state) {
    const auto ring = ovp::Ring::modular(1024);
    const auto f1 = ovp::euler_product(1, ring, 4000);
    const auto e = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(ovp::pow(f1, e));
}

void BM_BorweinA(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ovp::borwein_A(ovp::Ring::modular(243), n));
}

}  // namespace

BENCHMARK(BM_OverpartitionGf)->Arg(1)->Arg(64)->Arg(1024);
BENCHMARK(BM_OverpartitionGfReference)->Arg(1)->Arg(64);
BENCHMARK(BM_EulerPowerSparse)->Arg(2)->Arg(16)->Arg(-16)->Arg(128);
BENCHMARK(BM_EulerPowerDense)->Arg(2)->Arg(16)->Arg(-16)->Arg(128);
BENCHMARK(BM_BorweinA)->Arg(1000)->Arg(10000);
