#include <benchmark/benchmark.h>

#include "steiner/forms.hpp"
#include "steiner/gp_matrix.hpp"
#include "steiner/hypermatrix.hpp"
#include "steiner/nullspace.hpp"
#include "steiner/random.hpp"
#include "steiner/tree.hpp"

namespace {

using namespace steiner;

void BM_SteinerDistance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Tree t = random_tree(n, 1);
  SplitMix64 rng(2);
  std::vector<Vertex> s(8);
  for (auto _ : state) {
    for (auto& v : s) v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    benchmark::DoNotOptimize(t.steiner_distance(s));
  }
}
BENCHMARK(BM_SteinerDistance)->Arg(16)->Arg(256)->Arg(4096);

void BM_BuildSteiner(benchmark::State& state) {
  const Tree t = random_tree(static_cast<int>(state.range(0)), 3);
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_steiner(t, k));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(entry_count(t.size(), k)));
}
BENCHMARK(BM_BuildSteiner)->Args({8, 3})->Args({12, 4})->Args({10, 5})->Unit(benchmark::kMillisecond);

void BM_GradientExact(benchmark::State& state) {
  const Tree t = random_tree(static_cast<int>(state.range(0)), 4);
  const int k = static_cast<int>(state.range(1));
  const auto y = canonical_odd_nullvector(t, k);
  for (auto _ : state) benchmark::DoNotOptimize(gradient_direct(t, k, y));
}
BENCHMARK(BM_GradientExact)->Args({6, 3})->Args({12, 5})->Args({12, 7})->Unit(benchmark::kMicrosecond);

void BM_GradientFloat(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Tree t = random_tree(n, 5);
  const int k = static_cast<int>(state.range(1));
  SplitMix64 rng(6);
  std::vector<CFloat> y;
  for (int i = 0; i < n; ++i) y.emplace_back(Real(rng.unit()), Real(rng.unit()));
  for (auto _ : state) benchmark::DoNotOptimize(gradient_direct(t, k, std::span<const CFloat>(y)));
}
BENCHMARK(BM_GradientFloat)->Args({4, 4})->Args({8, 4})->Args({6, 6})->Unit(benchmark::kMicrosecond);

void BM_CubeOfSumIdentity(benchmark::State& state) {
  const Tree t = random_tree(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(verify_s3_membership(t));
}
BENCHMARK(BM_CubeOfSumIdentity)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Determinant(benchmark::State& state) {
  const RatMatrix d = distance_matrix(random_tree(static_cast<int>(state.range(0)), 8));
  for (auto _ : state) benchmark::DoNotOptimize(determinant_exact(d));
}
BENCHMARK(BM_Determinant)->Arg(12)->Arg(48)->Unit(benchmark::kMicrosecond);

void BM_NumericSearch(benchmark::State& state) {
  const Tree t = path_tree(4);
  SearchOptions opt;
  opt.restarts = 1;
  for (auto _ : state) {
    opt.seed++;
    benchmark::DoNotOptimize(numeric_search(t, static_cast<int>(state.range(0)), opt));
  }
}
BENCHMARK(BM_NumericSearch)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
