#include <benchmark/benchmark.h>

#include "hgc/coloring.hpp"
#include "hgc/degeneracy.hpp"
#include "hgc/enumerate.hpp"
#include "hgc/hypergraph.hpp"
#include "hgc/property.hpp"

using namespace hgc;

namespace {

Hypergraph wheel(std::size_t spokes) {
  std::vector<VertexId> names = default_vertex_names(spokes + 1);
  std::vector<std::vector<VertexId>> edges;
  for (std::size_t i = 1; i <= spokes; ++i) {
    edges.push_back({names[0], names[i]});
    edges.push_back({names[i], names[i % spokes + 1]});
  }
  return Hypergraph::build(names, edges);
}

void BM_FPartitionSolve(benchmark::State& state) {
  const Hypergraph h = wheel(static_cast<std::size_t>(state.range(0)));
  const FPartitionSolver solver(h);
  const VectorFunction f = VectorFunction::constant(h.order(), {2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(solver.solve(f));
}
BENCHMARK(BM_FPartitionSolve)->DenseRange(4, 10, 2);

void BM_HardPairRecognize(benchmark::State& state) {
  const Hypergraph h = families::cycle(static_cast<std::size_t>(state.range(0)));
  const HardPairRecognizer recognizer(h);
  const VectorFunction f = VectorFunction::constant(h.order(), {1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(recognizer.recognize(f));
}
BENCHMARK(BM_HardPairRecognize)->DenseRange(5, 13, 4);

void BM_ListColoring(benchmark::State& state) {
  const Hypergraph h = wheel(static_cast<std::size_t>(state.range(0)));
  const Property o = builtin("O");
  const ListColoringSearch search(h, o);
  const ListAssignment l = ListAssignment::constant(h.order(), {1, 2, 3});
  for (auto _ : state) benchmark::DoNotOptimize(search.colorable(l));
}
BENCHMARK(BM_ListColoring)->DenseRange(5, 11, 2);

void BM_ChiList(benchmark::State& state) {
  const Hypergraph h = families::cycle(static_cast<std::size_t>(state.range(0)));
  const Property o = builtin("O");
  for (auto _ : state) benchmark::DoNotOptimize(chi_list_P(h, o));
}
BENCHMARK(BM_ChiList)->Arg(4)->Arg(5)->Arg(6);

void BM_CanonicalForm(benchmark::State& state) {
  const Hypergraph h = wheel(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(h));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(4, 10, 2);

void BM_EnumerateGraphs(benchmark::State& state) {
  EnumerationBounds b;
  b.max_order = static_cast<std::size_t>(state.range(0));
  b.max_edges = 10;
  for (auto _ : state) benchmark::DoNotOptimize(enum_hypergraphs(b).size());
}
BENCHMARK(BM_EnumerateGraphs)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
