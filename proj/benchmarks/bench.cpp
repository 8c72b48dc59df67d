#include <benchmark/benchmark.h>

#include "mordell/heights.hpp"
#include "mordell/scan.hpp"

using namespace mordell;

namespace {

void BM_CanonicalHeightSmall(benchmark::State& state) {
    const RationalPoint P(3, 5);
    ArchHeightConfig cfg;
    cfg.exact_depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_height(-2, P, cfg));
    }
}
BENCHMARK(BM_CanonicalHeightSmall)->Arg(2)->Arg(6)->Arg(10);

void BM_CanonicalHeightFamily(benchmark::State& state) {
    // Family instance with ~47-bit b exercises the factoring paths too.
    const auto inst = family(TheoremId::Lang1, FamilySign::Pos, 10000);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_height(inst.b, inst.point));
    }
}
BENCHMARK(BM_CanonicalHeightFamily);

void BM_ArchSeriesReal(benchmark::State& state) {
    ArchHeightConfig cfg;
    cfg.depth = static_cast<int>(state.range(0));
    const Real x = Real::of(7.25, 320);
    for (auto _ : state) {
        benchmark::DoNotOptimize(arch_height_real(-2, x, cfg));
    }
}
BENCHMARK(BM_ArchSeriesReal)->Arg(10)->Arg(40);

void BM_LimitOracle(benchmark::State& state) {
    const RationalPoint P(3, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(limit_oracle(-2, P, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_LimitOracle)->Arg(4)->Arg(8);

void BM_IntegralPointScan(benchmark::State& state) {
    const MordellCurve curve(-2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_integral_points(curve, state.range(0)));
    }
}
BENCHMARK(BM_IntegralPointScan)->Arg(1000)->Arg(5000);

void BM_ReductionTables(benchmark::State& state) {
    for (auto _ : state) {
        for (long b = 1; b <= 200; ++b) {
            benchmark::DoNotOptimize(reduction_at_2(b % 64 ? b : b + 1));
            benchmark::DoNotOptimize(reduction_at_3(b % 729 ? b : b + 1));
            benchmark::DoNotOptimize(reduction_at(b, 7));
        }
    }
}
BENCHMARK(BM_ReductionTables);

void BM_Factorize(benchmark::State& state) {
    const Int n = Int(1000003) * 1000033;
    for (auto _ : state) {
        benchmark::DoNotOptimize(factorize(n));
    }
}
BENCHMARK(BM_Factorize);

}  // namespace
