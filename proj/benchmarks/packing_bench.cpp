// Throughput benchmarks for the packing hot paths: exact arithmetic, one
// place() call per algorithm family, the exact vector optimum, and a full
// churn replay through the repacking driver.

#include <benchmark/benchmark.h>

#include <variant>
#include <vector>

#include "packshift/binpack.hpp"
#include "packshift/generate.hpp"
#include "packshift/offline.hpp"
#include "packshift/robust.hpp"
#include "packshift/shelf.hpp"

namespace {

using namespace packshift;

GeneratorSpec bench_spec(const char* type, Problem problem, int d,
                         std::int64_t n) {
  GeneratorSpec spec;
  spec.type = type;
  spec.problem = problem;
  spec.d = d;
  spec.n = n;
  return spec;
}

void bm_rational_arith(benchmark::State& state) {
  const Rational x(355, 113);
  const Rational y(113, 355);
  Rational acc;
  for (auto _ : state) {
    acc = x * y + x - y;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(bm_rational_arith);

template <typename Alg, Problem P>
void bm_place(benchmark::State& state) {
  Trace trace = generate_trace(bench_spec("uniform", P, 2, state.range(0)), 1);
  for (auto _ : state) {
    Alg alg(2);
    Uid uid = 0;
    for (const Event& ev : trace.events) {
      alg.place(uid++, std::get<InsertOp>(ev.op).item);
    }
    benchmark::DoNotOptimize(alg.cost());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_shelf_place(benchmark::State& state) {
  Trace trace =
      generate_trace(bench_spec("uniform", Problem::strip2d, 2, state.range(0)), 1);
  for (auto _ : state) {
    ShelfStripPacker alg;
    Uid uid = 0;
    for (const Event& ev : trace.events) {
      alg.place(uid++, std::get<InsertOp>(ev.op).item);
    }
    benchmark::DoNotOptimize(alg.cost());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_shelf_place)->Arg(1000);

BENCHMARK(bm_place<HyperrectBinPacker, Problem::bin2d>)->Name("bm_slot_bin_place")->Arg(1000);
BENCHMARK(bm_place<HypercubeBinPacker, Problem::bin_hypercube>)
    ->Name("bm_hypercube_bin_place")
    ->Arg(1000);
BENCHMARK(bm_place<VectorPacker, Problem::vector_pack>)
    ->Name("bm_vector_place")
    ->Arg(1000);

void bm_exact_vector_opt(benchmark::State& state) {
  Trace trace = generate_trace(
      bench_spec("uniform", Problem::vector_pack, 2, state.range(0)), 3);
  std::vector<std::vector<Rational>> loads;
  for (const Event& ev : trace.events) {
    loads.push_back(
        std::get<VectorLoad>(std::get<InsertOp>(ev.op).item.shape).components);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_vector_bins(loads));
  }
}
BENCHMARK(bm_exact_vector_opt)->Arg(8)->Arg(10)->Arg(12);

void bm_churn_replay(benchmark::State& state) {
  GeneratorSpec spec =
      bench_spec("churn", Problem::vector_pack, 2, state.range(0));
  spec.depart_prob = Rational(3, 10);
  Trace trace = generate_trace(spec, 1);
  for (auto _ : state) {
    RunnerConfig cfg;
    cfg.problem = Problem::vector_pack;
    cfg.d = 2;
    cfg.epsilon = Rational(1, 10);
    RobustRunner runner(cfg);
    for (const Event& ev : trace.events) {
      benchmark::DoNotOptimize(runner.step(ev));
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_churn_replay)->Arg(500);

}  // namespace

BENCHMARK_MAIN();
