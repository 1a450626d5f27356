#include <benchmark/benchmark.h>

#include "turanlab/codegree_star.hpp"
#include "turanlab/diagonal.hpp"
#include "turanlab/dictionary.hpp"
#include "turanlab/hypergraph.hpp"
#include "turanlab/monomial.hpp"
#include "turanlab/squarezero.hpp"

using namespace turanlab;

static void BM_BuildPG(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RGraph empty(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(build_pG(n, empty).term_count());
}
BENCHMARK(BM_BuildPG)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_InDIPartite(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Polynomial p = build_pG(n, turan_construct(n, 3, 3));
  for (auto _ : state) benchmark::DoNotOptimize(in_DI(p, {n, 4}));
}
BENCHMARK(BM_InDIPartite)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

static void BM_MinHittingSetTriangles(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CopyFamily copies = enumerate_forbidden_copies(complete_graph_pattern(3), n);
  const int size = EdgeUniverse(n, 2).size();
  for (auto _ : state) benchmark::DoNotOptimize(min_hitting_set(copies.copies, size).size);
}
BENCHMARK(BM_MinHittingSetTriangles)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_BruteForceEx(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SearchOptions options;
  options.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_ex(n, complete_graph_pattern(3), options).value);
}
BENCHMARK(BM_BruteForceEx)->Args({6, 1})->Args({7, 1})->Args({7, 4})->Unit(benchmark::kMillisecond);

static void BM_GenExViaCover(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(gen_ex_via_cover(6, complete_graph_pattern(3), complete_graph_pattern(4)).value);
  }
}
BENCHMARK(BM_GenExViaCover)->Unit(benchmark::kMillisecond);

static void BM_Hilbert(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = SquareZeroQuotient::balanced_partite(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert(a, 4));
}
BENCHMARK(BM_Hilbert)->Arg(12)->Arg(20)->Arg(24);

static void BM_AlphaJ(benchmark::State& state) {
  CodegreeStarOptions options;
  options.hilbert_bound = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(alpha_j({6, 5, 3}, options).value);
}
BENCHMARK(BM_AlphaJ)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
