#include <benchmark/benchmark.h>

#include "pk/diagram.hpp"
#include "pk/families.hpp"
#include "pk/invariants.hpp"
#include "pk/linalg.hpp"

namespace {

const char* const kSymbols[] = {"3 i 3", "9*.i", "4 1 i,5,-5", "495 i 99", "(i,i,i),3,-3"};

void BM_Parse(benchmark::State& state) {
  const char* symbol = kSymbols[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(pk::notation::parse(symbol));
  state.SetLabel(symbol);
}
BENCHMARK(BM_Parse)->DenseRange(0, 4);

void BM_BuildDiagram(benchmark::State& state) {
  const char* symbol = kSymbols[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(pk::diagram::buildDiagram(symbol));
  state.SetLabel(symbol);
}
BENCHMARK(BM_BuildDiagram)->DenseRange(0, 4);

void BM_Pseudodeterminant(benchmark::State& state) {
  const char* symbol = kSymbols[state.range(0)];
  const auto d = pk::diagram::buildDiagram(symbol);
  for (auto _ : state) benchmark::DoNotOptimize(pk::invariants::pseudodeterminant(d));
  state.SetLabel(symbol);
}
BENCHMARK(BM_Pseudodeterminant)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

void BM_TwistDeterminant(benchmark::State& state) {
  const auto d = pk::diagram::buildDiagram(std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pk::invariants::determinant(d));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TwistDeterminant)->RangeMultiplier(4)->Range(4, 1024)->Complexity()
    ->Unit(benchmark::kMicrosecond);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto m = pk::invariants::coloringSystem(pk::diagram::buildDiagram("6*2:2:2 0")).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(pk::linalg::smithNormalForm(m));
}
BENCHMARK(BM_SmithNormalForm);

void BM_KHProperty(benchmark::State& state) {
  const auto d = pk::diagram::buildDiagram(state.range(0) == 0 ? "(3)(i)(-3)" : "(5)(i)(-5)");
  for (auto _ : state) benchmark::DoNotOptimize(pk::invariants::khProperty(d));
}
BENCHMARK(BM_KHProperty)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifyRow(benchmark::State& state) {
  const auto& spec = pk::families::familyRow(static_cast<int>(state.range(0)));
  const auto grid = pk::families::defaultGrid(spec);
  for (auto _ : state) benchmark::DoNotOptimize(pk::families::verifyRow(spec, grid));
}
BENCHMARK(BM_VerifyRow)->Arg(1)->Arg(22)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
