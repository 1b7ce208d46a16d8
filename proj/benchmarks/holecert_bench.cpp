#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "holecert/constructions.hpp"
#include "holecert/corpus.hpp"
#include "holecert/exact.hpp"
#include "holecert/holes.hpp"
#include "holecert/verifier.hpp"

namespace {

using namespace holecert;

std::vector<Graph> two_hole_graphs(std::size_t n) {
  return corpus::sample_with_holes(64, n, n, {2, 5}, 2, 2, 1234 + n);
}

void BM_EnumerateHoles(benchmark::State& state) {
  std::mt19937_64 rng(42);
  std::vector<Graph> graphs;
  for (int i = 0; i < 64; ++i) {
    graphs.push_back(corpus::random_graph(static_cast<std::size_t>(state.range(0)), {1, 3}, rng));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_holes(graphs[i++ % graphs.size()], 3));
  }
}
BENCHMARK(BM_EnumerateHoles)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_Chordality(benchmark::State& state) {
  std::mt19937_64 rng(7);
  Graph g = corpus::random_graph(static_cast<std::size_t>(state.range(0)), {1, 4}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(chordality(g));
}
BENCHMARK(BM_Chordality)->Arg(16)->Arg(64)->Arg(256);

void BM_CertifyTwoHoles(benchmark::State& state) {
  auto graphs = two_hole_graphs(static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(certify(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CertifyTwoHoles)->Arg(7)->Arg(9)->Arg(12);

void BM_CertifyCutSplitFamily(benchmark::State& state) {
  std::vector<Graph> graphs;
  for (auto& f : corpus::named_families()) {
    if (f.name.rfind("eared_fused", 0) == 0) graphs.push_back(std::move(f.graph));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(certify(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CertifyCutSplitFamily);

void BM_ExactK(benchmark::State& state) {
  auto graphs = two_hole_graphs(static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(exact_k(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_ExactK)->Arg(7)->Arg(9)->Arg(12);

void BM_CompetitionGraph(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  auto vs = corpus::numbered_vertices(n);
  std::vector<Arc> arcs;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (rng() % 4 == 0) arcs.push_back({vs[a], vs[b]});
    }
  }
  Digraph d(vs, arcs);
  for (auto _ : state) benchmark::DoNotOptimize(verify::competition_graph(d));
}
BENCHMARK(BM_CompetitionGraph)->Arg(16)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
