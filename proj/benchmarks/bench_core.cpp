#include <benchmark/benchmark.h>

#include "dimer/algebra.hpp"
#include "dimer/ladder.hpp"
#include "dimer/polygen.hpp"
#include "dimer/symmetry.hpp"

using namespace dimer;

namespace {

TorusGraph model(const std::string& name) { return load_file(std::string(DIMER_DATA_DIR) + "/" + name + ".dimer"); }

TorusGraph square(int n) { return pattern_to_dimer(square_pattern(n)); }

void BM_EnumerateSquare(benchmark::State& state) {
  auto g = square(static_cast<int>(state.range(0)));
  auto q = dualize(g);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_matchings(g, q));
}
BENCHMARK(BM_EnumerateSquare)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_PolygonSquare(benchmark::State& state) {
  auto ms = enumerate_matchings(square(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(polygon(ms).points));
}
BENCHMARK(BM_PolygonSquare)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_GeometricCheck(benchmark::State& state) {
  auto q = dualize(square(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(geometric_check(zigzag_paths(q)));
}
BENCHMARK(BM_GeometricCheck)->DenseRange(1, 4);

void BM_AnomalyFreeLP(benchmark::State& state) {
  auto q = dualize(model(state.range(0) == 0 ? "memeg" : "examplestp"));
  for (auto _ : state) benchmark::DoNotOptimize(find_anomaly_free(q));
}
BENCHMARK(BM_AnomalyFreeLP)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_HexagonalAlgebra(benchmark::State& state) {
  auto g = model("hexagonal");
  auto q = dualize(g);
  auto ms = enumerate_matchings(g, q);
  ToricAlgebra A(q, ms, grading_weights(g, q, ms, Grading::Matchings));
  for (auto _ : state) benchmark::DoNotOptimize(A.algebraic_consistency(state.range(0)));
}
BENCHMARK(BM_HexagonalAlgebra)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_ConifoldCy3(benchmark::State& state) {
  auto g = model("conifold");
  auto q = dualize(g);
  auto ms = enumerate_matchings(g, q);
  ToricAlgebra A(q, ms, grading_weights(g, q, ms, Grading::Matchings));
  for (auto _ : state) benchmark::DoNotOptimize(A.cy3_check(state.range(0)));
}
BENCHMARK(BM_ConifoldCy3)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_LadderSquare(benchmark::State& state) {
  auto g = square(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_ladder(g, {4, Grading::Extremal}));
}
BENCHMARK(BM_LadderSquare)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
