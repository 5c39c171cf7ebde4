// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "contact_tensor/catalog.hpp"
#include "contact_tensor/curvature.hpp"

using namespace ctensor;

namespace {

const FrameManifold& fixture(int which) {
  static const FrameManifold kmu = build_kmu_symbolic().structure.base();
  static const FrameManifold ex41 = build_example_41().structure.base();
  static const FrameManifold flat5 = build_flat_euclidean(5).structure.base();
  switch (which) {
    case 0: return kmu;
    case 1: return ex41;
    default: return flat5;
  }
}

const char* fixture_name(int which) { return which == 0 ? "kmu" : which == 1 ? "example41" : "flat5"; }

ExecPolicy policy(int p) { return p ? ExecPolicy::parallel : ExecPolicy::serial; }

void BM_Koszul(benchmark::State& state) {
  const FrameManifold& m = fixture(static_cast<int>(state.range(0)));
  state.SetLabel(fixture_name(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(koszul(m, policy(static_cast<int>(state.range(1)))));
}

void BM_Riemann(benchmark::State& state) {
  const FrameManifold& m = fixture(static_cast<int>(state.range(0)));
  const ConnectionTable conn = koszul(m);
  state.SetLabel(fixture_name(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(riemann(m, conn, policy(static_cast<int>(state.range(1)))));
}

void BM_NablaR(benchmark::State& state) {
  const FrameManifold& m = fixture(static_cast<int>(state.range(0)));
  state.SetLabel(fixture_name(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    state.PauseTiming();
    CurvatureTables t(m);
    state.ResumeTiming();
    t.compute_all_nabla_R(policy(static_cast<int>(state.range(1))));
    benchmark::DoNotOptimize(t);
  }
}

void grid(benchmark::internal::Benchmark* b) {
  b->ArgNames({"fixture", "parallel"});
  for (int f = 0; f < 3; ++f)
    for (int p = 0; p < 2; ++p) b->Args({f, p});
  b->Unit(benchmark::kMicrosecond);
}

}  // namespace

BENCHMARK(BM_Koszul)->Apply(grid);
BENCHMARK(BM_Riemann)->Apply(grid);
BENCHMARK(BM_NablaR)->Apply(grid);

BENCHMARK_MAIN();
