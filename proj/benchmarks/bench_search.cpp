#include "proofforge/optimizer.hpp"
#include "proofforge/sampling.hpp"

#include <benchmark/benchmark.h>

using namespace proofforge;

namespace {

std::vector<RandomStructure> corpus(std::size_t vertices) {
  Rng rng(42);
  std::vector<RandomStructure> out;
  for (int i = 0; i < 64; ++i) out.push_back(random_structure(rng, vertices, 3));
  return out;
}

void BM_DijkstraTreeSize(benchmark::State& state) {
  auto c = corpus(state.range(0));
  auto m = tree_size_measure();
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& s = c[i++ % c.size()];
    benchmark::DoNotOptimize(dijkstra_optimal(s.graph, s.axiom, m, s.goal).weight);
  }
}
BENCHMARK(BM_DijkstraTreeSize)->Arg(10)->Arg(40)->Arg(160);

void BM_DijkstraDepth(benchmark::State& state) {
  auto c = corpus(state.range(0));
  auto m = depth_measure();
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& s = c[i++ % c.size()];
    benchmark::DoNotOptimize(dijkstra_optimal(s.graph, s.axiom, m, s.goal).weight);
  }
}
BENCHMARK(BM_DijkstraDepth)->Arg(10)->Arg(40)->Arg(160);

// the exhaustive oracle, for comparison on the small sizes only
void BM_BruteForceTreeSize(benchmark::State& state) {
  auto c = corpus(state.range(0));
  auto w = as_proof_weight(tree_size_measure());
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& s = c[i++ % c.size()];
    benchmark::DoNotOptimize(brute_force_optimal(s.graph, s.axiom, w, s.goal).weight);
  }
}
BENCHMARK(BM_BruteForceTreeSize)->Arg(6)->Arg(10);

void BM_DecideTreeSize(benchmark::State& state) {
  auto c = corpus(10);
  std::vector<DerivationStructure> ds;
  std::vector<Weight> opt;
  for (const auto& s : c) {
    DerivationStructure d;
    d.graph = s.graph;
    d.axiom = s.axiom;
    d.max_premises = 3;
    d.index_labels();
    ds.push_back(std::move(d));
    opt.push_back(dijkstra_optimal(s.graph, s.axiom, tree_size_measure(), s.goal).weight);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    auto k = i++ % ds.size();
    auto view = structure_view(ds[k]);
    benchmark::DoNotOptimize(decide_treesize_leq(*view, c[k].graph.label(c[k].goal), opt[k], {false, false}).yes);
  }
}
BENCHMARK(BM_DecideTreeSize);

}  // namespace
