// Serial reference vs OpenMP kernels on GU2(Z/9) (order 7776) and GL2(Z/9).
// Run with OMP_NUM_THREADS set to compare scaling.

#include <benchmark/benchmark.h>

#include "glgu/kernels.hpp"
#include "glgu/partition.hpp"

namespace {

using glgu::Exec;
using glgu::GroupKind;

const glgu::Group& group(GroupKind kind) {
  static const glgu::Group gl = glgu::Group::enumerate({GroupKind::GL2, glgu::Family::Mixed, 3, 1, 2});
  static const glgu::Group gu = glgu::Group::enumerate({GroupKind::GU2, glgu::Family::Mixed, 3, 1, 2});
  return kind == GroupKind::GL2 ? gl : gu;
}

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }
GroupKind kind_of(const benchmark::State& st) { return st.range(1) ? GroupKind::GU2 : GroupKind::GL2; }

void BM_Enumerate(benchmark::State& st) {
  const auto& G = group(kind_of(st));
  for (auto _ : st) benchmark::DoNotOptimize(glgu::kernels::enumerate_keys(G.kind(), G.ring(), exec_of(st)));
}

void BM_Involutions(benchmark::State& st) {
  const auto& G = group(kind_of(st));
  for (auto _ : st) benchmark::DoNotOptimize(glgu::kernels::involutions(G, exec_of(st)));
}

void BM_StrongWitnesses(benchmark::State& st) {
  const auto& G = group(kind_of(st));
  const auto inv = glgu::kernels::involutions(G, Exec::Serial);
  for (auto _ : st) benchmark::DoNotOptimize(glgu::kernels::strong_reality_witnesses(G, inv, exec_of(st)));
}

void BM_Partition(benchmark::State& st) {
  const auto& G = group(kind_of(st));
  for (auto _ : st) benchmark::DoNotOptimize(glgu::conjugacy_partition(G, exec_of(st)));
}

void BM_ClassStructure(benchmark::State& st) {
  const auto& G = group(kind_of(st));
  const auto P = glgu::conjugacy_partition(G, Exec::Serial);
  for (auto _ : st) benchmark::DoNotOptimize(glgu::kernels::class_structure(G, P.class_of, P.reps, exec_of(st)));
}

// Args: {parallel, gu2}
#define GLGU_BENCH(fn) BENCHMARK(fn)->ArgsProduct({{0, 1}, {0, 1}})->ArgNames({"omp", "gu2"})->Unit(benchmark::kMillisecond)
GLGU_BENCH(BM_Enumerate);
GLGU_BENCH(BM_Involutions);
GLGU_BENCH(BM_StrongWitnesses);
GLGU_BENCH(BM_Partition);
GLGU_BENCH(BM_ClassStructure);

}  // namespace

BENCHMARK_MAIN();
