#include <benchmark/benchmark.h>

#include "gammalab/enumerate.hpp"
#include "gammalab/lab.hpp"

using namespace gammalab;

static void BM_EnumerateTopologies(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_topologies(n));
}
BENCHMARK(BM_EnumerateTopologies)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_EnumerateUpToIso(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_topologies(n, true));
}
BENCHMARK(BM_EnumerateUpToIso)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_SemiCalculus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Operation> ops;
  for (const FiniteSpace& s : enumerate_topologies(n, true)) {
    for (Operation& op : sample_operations(s, 4, 1)) ops.push_back(std::move(op));
  }
  for (auto _ : state) {
    for (const Operation& op : ops) benchmark::DoNotOptimize(SemiCalculus(op));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ops.size()));
}
BENCHMARK(BM_SemiCalculus)->DenseRange(2, 6);

static void BM_CheckMapTheorem(benchmark::State& state) {
  CheckOptions o;
  o.max_points = 3;
  o.workers = static_cast<int>(state.range(0));
  o.closed_defs = {ClosedDef::Complement, ClosedDef::ClosurePoint};
  const TheoremSpec& spec = *find_theorem("T5.5.1-2");
  for (auto _ : state) benchmark::DoNotOptimize(check_theorem(spec, o));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid_size(spec, o)));
}
BENCHMARK(BM_CheckMapTheorem)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_CheckRandomOps(benchmark::State& state) {
  CheckOptions o;
  o.max_points = 3;
  o.ops = OpSource::parse("random:100:7");
  const TheoremSpec& spec = *find_theorem("T5.4.1");
  for (auto _ : state) benchmark::DoNotOptimize(check_theorem(spec, o));
}
BENCHMARK(BM_CheckRandomOps)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
