#include "proofforge/generators.hpp"

#include <benchmark/benchmark.h>

using namespace proofforge;

namespace {

// A0 <= ex r. A1, ..., plus a conjunction at every step
Theory ladder(int n) {
  std::string src;
  for (int i = 0; i < n; ++i) {
    auto a = "A" + std::to_string(i), b = "A" + std::to_string(i + 1);
    src += a + " <= ex r. " + b + "\n";
    src += "(" + a + " and B) <= " + b + "\n";
    src += "ex r. " + b + " <= B\n";
  }
  return parse_theory(src);
}

void BM_ElkSaturate(benchmark::State& state) {
  auto t = ladder(state.range(0));
  auto goal = parse_gci("A0 <= B");
  for (auto _ : state) benchmark::DoNotOptimize(elk_materialize(t, goal).graph.vertex_count());
}
BENCHMARK(BM_ElkSaturate)->Arg(4)->Arg(16)->Arg(64);

void BM_EliDeep(benchmark::State& state) {
  auto d = deep_eli_theory(state.range(0));
  auto t = normalize_eli(d.theory).theory;
  for (auto _ : state) benchmark::DoNotOptimize(eli_materialize(t, d.goal).graph.vertex_count());
}
BENCHMARK(BM_EliDeep)->DenseRange(1, 4);

void BM_QbfDecide(benchmark::State& state) {
  auto inst = qbf_to_eli(parse_qbf("A x1 E x2 A x3 : (x1 | x2) & (!x2 | x3 | !x1)"));
  for (auto _ : state) benchmark::DoNotOptimize(decide_instance(inst));
}
BENCHMARK(BM_QbfDecide);

}  // namespace
