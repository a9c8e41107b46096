#include <benchmark/benchmark.h>

#include "bcells/cells.hpp"
#include "bcells/descents.hpp"
#include "bcells/kl_basis.hpp"
#include "bcells/tableau.hpp"
#include "bcells/vogan.hpp"

namespace {

void BM_VoganContext(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bcells::VoganContext(n).group().size());
}
BENCHMARK(BM_VoganContext)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_XiOrbits(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bcells::VoganContext ctx(n);
  for (auto _ : state) benchmark::DoNotOptimize(ctx.orbits().num_classes());
}
BENCHMARK(BM_XiOrbits)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_VoganClasses(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bcells::VoganContext ctx(n);
  const bcells::WeightFunction weight(1, n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(ctx.vogan_classes(weight).final.num_classes());
}
BENCHMARK(BM_VoganClasses)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_RxiPartition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bcells::GroupEnumeration group(n);
  const bcells::WeightFunction weight(1, n);
  for (auto _ : state) benchmark::DoNotOptimize(bcells::rxi_partition(group, weight).num_classes());
}
BENCHMARK(BM_RxiPartition)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_KlBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bcells::kl_basis(n, bcells::WeightFunction(1, n)).size());
}
BENCHMARK(BM_KlBasis)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_LeftCells(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto table = bcells::kl_basis(n, bcells::WeightFunction(1, n - 1));
  for (auto _ : state) benchmark::DoNotOptimize(bcells::left_cells(table).num_classes());
}
BENCHMARK(BM_LeftCells)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_RsGeneralized(benchmark::State& state) {
  const auto elements = bcells::enumerate(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& w : elements) benchmark::DoNotOptimize(bcells::rs_generalized(w));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(elements.size()));
}
BENCHMARK(BM_RsGeneralized)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
