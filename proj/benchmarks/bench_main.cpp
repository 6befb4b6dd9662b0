#include <benchmark/benchmark.h>

#include "quiverlab/graded_algebra.hpp"

namespace {

quiverlab::BoundQuiver kronecker() {
  quiverlab::BoundQuiver bq;
  bq.quiver.add_vertex("1");
  bq.quiver.add_vertex("2");
  bq.quiver.add_arrow("a", "1", "2");
  bq.quiver.add_arrow("b", "1", "2");
  return bq;
}

void BM_graded_engine_kronecker(benchmark::State& state) {
  auto bq = kronecker();
  for (auto _ : state) {
    quiverlab::GradedAlgebra alg(bq, 3);
    benchmark::DoNotOptimize(alg.total_dim());
  }
}
BENCHMARK(BM_graded_engine_kronecker);

}  // namespace

BENCHMARK_MAIN();
