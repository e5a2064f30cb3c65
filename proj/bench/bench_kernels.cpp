// Serial reference kernels against their OpenMP counterparts.

#include "sytdesc/enumerate.hpp"
#include "sytdesc/sample.hpp"

#include <benchmark/benchmark.h>

using namespace sytdesc;

namespace {

const Partition kProfileShape({6, 5, 4, 2}); // 17 cells, ~ 2.5M tableaux
const Partition kAuditShape({4, 3, 1});      // 8! fillings

void BM_ProfileSerial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(descent_profile_serial(kProfileShape));
}

void BM_ProfileParallel(benchmark::State& state) {
    EnumOptions o;
    o.threads = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(descent_profile(kProfileShape, o));
}

void BM_AuditSerial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(exhaustive_audit_serial(kAuditShape));
}

void BM_AuditParallel(benchmark::State& state) {
    AuditOptions o;
    o.threads = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(exhaustive_audit(kAuditShape, o));
}

void BM_Sample(benchmark::State& state) {
    const Partition shape({10, 8, 6, 4, 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_syt(shape, 10000, 1, static_cast<int>(state.range(0))));
}

} // namespace

BENCHMARK(BM_ProfileSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProfileParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AuditSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AuditParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sample)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
