#include <benchmark/benchmark.h>

#include "chromfold/collapse.hpp"
#include "chromfold/jiggling.hpp"
#include "chromfold/snapshot_oracle.hpp"
#include "chromfold/subdivision.hpp"

using namespace chromfold;

static void BM_IterateTriangle(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iterate(2, r, PlacementParameter(1.0)).finest().cell_count());
}
BENCHMARK(BM_IterateTriangle)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_IterateTetrahedron(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iterate(3, r, PlacementParameter(1.0)).finest().cell_count());
}
BENCHMARK(BM_IterateTetrahedron)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

static void BM_EnumerateExecutions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_executions(n).size());
}
BENCHMARK(BM_EnumerateExecutions)->DenseRange(2, 6);

static void BM_CrossValidate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cross_validate(n).match());
}
BENCHMARK(BM_CrossValidate)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_FoldEvaluate(benchmark::State& state) {
  const IteratedFolding f = iterate(2, static_cast<int>(state.range(0)), PlacementParameter(1.0));
  const FoldEvaluator eval(f);
  Eigen::VectorXd x(3);
  x << 0.2, 0.3, 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(eval.fold(x));
}
BENCHMARK(BM_FoldEvaluate)->DenseRange(1, 3);

static void BM_BuildSection(benchmark::State& state) {
  const TorusModel model(2, 3);
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_section(model, r, PlacementParameter(1.0)).pieces().size());
}
BENCHMARK(BM_BuildSection)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_QuasiTransverse(benchmark::State& state) {
  const TorusModel model(2, 3);
  const JiggledSection section = build_section(model, static_cast<int>(state.range(0)), PlacementParameter(1.0));
  for (auto _ : state) benchmark::DoNotOptimize(check_quasi_transverse(section, PlaneField::exponential(2)).pass);
}
BENCHMARK(BM_QuasiTransverse)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_PrismCollapse(benchmark::State& state) {
  const IteratedFolding f = iterate(2, static_cast<int>(state.range(0)), PlacementParameter(1.0));
  const PrismComplex prism = whitney_prism(f.finest());
  const SimplicialComplex bottom = prism.bottom();
  for (auto _ : state) benchmark::DoNotOptimize(collapse_to(prism.complex, bottom).success);
}
BENCHMARK(BM_PrismCollapse)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
