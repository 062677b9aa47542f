#include <benchmark/benchmark.h>

#include "gaidx/canonical.hpp"
#include "gaidx/enumerate.hpp"
#include "gaidx/families.hpp"
#include "gaidx/index.hpp"
#include "gaidx/transform.hpp"
#include "gaidx/verify.hpp"

namespace {

using namespace gaidx;

void BM_GaIndexSn3(benchmark::State& state) {
  const Graph g = make_family(FamilySpec::sn3(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(ga_index(g));
}
BENCHMARK(BM_GaIndexSn3)->Arg(16)->Arg(256)->Arg(4096);

void BM_CanonicalForm(benchmark::State& state) {
  const auto classes = enumerate_unicyclic(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(classes[i].graph));
    i = (i + 1) % classes.size();
  }
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(12);

void BM_CanonicalFormCycle(benchmark::State& state) {
  const Graph g = Graph::cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormCycle)->Arg(12)->Arg(48);

void BM_EnumerateUnicyclic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_unicyclic(n).size());
}
BENCHMARK(BM_EnumerateUnicyclic)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);

void BM_ReductionPipeline(benchmark::State& state) {
  const auto classes = enumerate_unicyclic(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& c : classes) benchmark::DoNotOptimize(reduction_pipeline(c.graph).steps.size());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(classes.size()));
}
BENCHMARK(BM_ReductionPipeline)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_VerifyMonotonicity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_monotonicity(n).total_applications());
}
BENCHMARK(BM_VerifyMonotonicity)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
