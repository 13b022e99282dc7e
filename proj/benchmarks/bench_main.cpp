// Benchmarks for the hot paths: fixed-point tables, subgroup enumeration,
// partition search, and full decompositions.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "avcurves/curve.hpp"
#include "avcurves/kani_rosen.hpp"
#include "avcurves/polarization.hpp"

namespace {

using namespace avc;

TorsionPoint pt(std::int64_t n1, std::int64_t d1, std::int64_t n2,
                std::int64_t d2) {
  return TorsionPoint{Rational01(n1, d1), Rational01(n2, d2)};
}

void BM_FixCountTable_d8(benchmark::State& state) {
  const CoverCurve curve = make_cover_curve(8, {pt(1, 4, 0, 1), pt(0, 1, 1, 2)});
  for (auto _ : state) {
    std::int64_t total = 0;
    for (const TorsionPoint& x : curve.X().elements()) {
      total += fix_count(curve, x).count;
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_FixCountTable_d8);

void BM_KernelSubgroups_d12(benchmark::State& state) {
  const FiniteSubgroup kernel = span({pt(1, 12, 0, 1), pt(0, 1, 1, 12)});
  for (auto _ : state) {
    auto groups = subgroups_of_order(kernel, 12);
    benchmark::DoNotOptimize(groups);
  }
}
BENCHMARK(BM_KernelSubgroups_d12);

void BM_PartitionSearch_NineProduct(benchmark::State& state) {
  AutGroup G(make_cover_curve(9, {pt(1, 3, 0, 1), pt(0, 1, 1, 3)}));
  for (auto _ : state) {
    auto parts = find_partitions(G);
    benchmark::DoNotOptimize(parts);
  }
}
BENCHMARK(BM_PartitionSearch_NineProduct);

void BM_Decompose_d9(benchmark::State& state) {
  const CoverCurve curve = make_cover_curve(9, {pt(1, 3, 0, 1), pt(0, 1, 1, 3)});
  for (auto _ : state) {
    Decomposition dec = decompose(curve);
    benchmark::DoNotOptimize(dec);
  }
}
BENCHMARK(BM_Decompose_d9);

void BM_NormalizeBasis_d12(benchmark::State& state) {
  const PolarizationContext ctx(12);
  const FiniteSubgroup X = span({pt(1, 12, 1, 12)});
  for (auto _ : state) {
    PolarizationContext normalized = normalize_decomposition(ctx, X);
    benchmark::DoNotOptimize(normalized);
  }
}
BENCHMARK(BM_NormalizeBasis_d12);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
