#include <benchmark/benchmark.h>

#include "singlet/oracle_su3.hpp"
#include "singlet/su2_engine.hpp"
#include "singlet/su3_engine.hpp"

using namespace singlet;

static void BM_enumerate_su3(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_su3(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_enumerate_su3)->Arg(6)->Arg(10)->Arg(14);

static void BM_norm_chain(benchmark::State& state) {
    const Su3Label l{3, 2, 1, 2, 1, 3, -2};
    for (auto _ : state) benchmark::DoNotOptimize(su3::norm_sq(l));
}
BENCHMARK(BM_norm_chain);

static void BM_act_bilinear(benchmark::State& state) {
    const InvariantOp op = parse_op("a(1).b(2)");
    const Su3Label l{2, 1, 1, 0, 1, 1, 1};
    for (auto _ : state) benchmark::DoNotOptimize(su3::act(op, l));
}
BENCHMARK(BM_act_bilinear);

static void BM_act_trilinear(benchmark::State& state) {
    const InvariantOp op = parse_op("eps(a(1),a(2),a(3))");
    const Su3Label l{1, 1, 0, 1, 0, 1, 1};
    for (auto _ : state) benchmark::DoNotOptimize(su3::unnormalized_act(op, l));
}
BENCHMARK(BM_act_trilinear);

static void BM_oracle_build(benchmark::State& state) {
    const Su3Label l{1, 1, 0, 0, 1, 0, 1};
    for (auto _ : state) benchmark::DoNotOptimize(oracle::build_state(l));
}
BENCHMARK(BM_oracle_build);

static void BM_oracle_inner(benchmark::State& state) {
    const oracle::Su3Vector v = oracle::build_state(Su3Label{1, 1, 1, 0, 0, 0, 0});
    const oracle::Su3Vector w = oracle::build_state(Su3Label{0, 0, 0, 1, 1, 1, 0});
    for (auto _ : state) benchmark::DoNotOptimize(inner(v, w));
}
BENCHMARK(BM_oracle_inner);

static void BM_su2_act(benchmark::State& state) {
    const InvariantOp op = parse_op("a+(3).a(1)");
    const Su2Label l{3, 2, 1};
    for (auto _ : state) benchmark::DoNotOptimize(su2::act(op, l));
}
BENCHMARK(BM_su2_act);

BENCHMARK_MAIN();
