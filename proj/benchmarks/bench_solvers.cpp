#include <benchmark/benchmark.h>

#include "edgefair/fairness.hpp"
#include "edgefair/generator.hpp"
#include "edgefair/goods_chores.hpp"
#include "edgefair/mixed_allocation.hpp"
#include "edgefair/mixed_orientation.hpp"
#include "edgefair/oracle.hpp"
#include "support/test_support.hpp"

using namespace edgefair;

namespace {

Instance bench_instance(GenKind kind, int n, int m, std::uint64_t seed) {
  GenOptions opt;
  opt.kind = kind;
  opt.n = n;
  opt.m = m;
  opt.seed = seed;
  return generate_instance(opt);
}

void BM_Checker(benchmark::State& state) {
  Instance inst = bench_instance(GenKind::Mixed, static_cast<int>(state.range(0)),
                                 static_cast<int>(state.range(0)) * 4, 17);
  Allocation alloc = efx0minus_allocation(inst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(passes(inst, alloc, Notion::Efx0Minus));
  }
}
BENCHMARK(BM_Checker)->Arg(10)->Arg(50)->Arg(200);

void BM_Efx0MinusAllocation(benchmark::State& state) {
  Instance inst = bench_instance(GenKind::Mixed, static_cast<int>(state.range(0)),
                                 static_cast<int>(state.range(0)) * 5, 18);
  for (auto _ : state) {
    benchmark::DoNotOptimize(efx0minus_allocation(inst));
  }
}
BENCHMARK(BM_Efx0MinusAllocation)->Arg(20)->Arg(100)->Arg(200);

void BM_EfxPlus0Allocation(benchmark::State& state) {
  Instance inst = bench_instance(GenKind::Mixed, static_cast<int>(state.range(0)),
                                 static_cast<int>(state.range(0)) * 5, 19);
  for (auto _ : state) {
    benchmark::DoNotOptimize(efxplus0_allocation(inst));
  }
}
BENCHMARK(BM_EfxPlus0Allocation)->Arg(20)->Arg(100)->Arg(200);

void BM_ChoresEfx0Decider(benchmark::State& state) {
  Instance inst = bench_instance(GenKind::Chores, static_cast<int>(state.range(0)),
                                 static_cast<int>(state.range(0)) * 3, 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(chores_efx0_orientation(inst));
  }
}
BENCHMARK(BM_ChoresEfx0Decider)->Arg(20)->Arg(100)->Arg(200);

void BM_OracleOrientations(benchmark::State& state) {
  Instance inst = bench_instance(GenKind::Mixed, 5, static_cast<int>(state.range(0)), 21);
  SearchSpec spec;
  spec.mode = SearchMode::Orientations;
  spec.notion = Notion::Efx00;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_exists(inst, spec));
  }
}
BENCHMARK(BM_OracleOrientations)->Arg(6)->Arg(8)->Arg(10);

void BM_AuditProperties(benchmark::State& state) {
  Instance inst = bench_instance(GenKind::Mixed, static_cast<int>(state.range(0)),
                                 static_cast<int>(state.range(0)) * 4, 22);
  Part1State st = part1(inst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(audit_properties(inst, st.orientation));
  }
}
BENCHMARK(BM_AuditProperties)->Arg(10)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
