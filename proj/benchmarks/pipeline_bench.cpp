#include <benchmark/benchmark.h>

#include "mhol/catalog.hpp"
#include "mhol/multiple_holomorph.hpp"
#include "mhol/oracle.hpp"

namespace {

using namespace mhol;

const char* const kNames[] = {"S4", "D7", "A5", "C7:C9"};

GroupPtr group(const char* expr) {
  if (std::string(expr) == "C7:C9") {
    return elaborate(*semidirect(cyclic(7), cyclic(9), {{0, 2, 4, 6, 1, 3, 5}}));
  }
  return elaborate(*parse_group_expression(expr));
}

void BM_Automorphisms(benchmark::State& state) {
  const auto G = group(kNames[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(G).order());
  state.SetLabel(G->name());
}
BENCHMARK(BM_Automorphisms)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Triplets(benchmark::State& state) {
  const auto G = group(kNames[state.range(0)]);
  const auto A = std::make_shared<const AutomorphismGroup>(automorphism_group(G));
  const auto H = build_holomorph(G, A);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_regular_triplets(H).size());
  state.SetLabel(G->name());
}
BENCHMARK(BM_Triplets)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_NormalSubgroups(benchmark::State& state) {
  const auto G = group(kNames[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(normal_subgroups(G).size());
  state.SetLabel(G->name());
}
BENCHMARK(BM_NormalSubgroups)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_TGroup(benchmark::State& state) {
  const auto G = group(kNames[state.range(0)]);
  const auto A = std::make_shared<const AutomorphismGroup>(automorphism_group(G));
  const auto H = build_holomorph(G, A);
  const auto entries = compute_H0(H);
  for (auto _ : state) benchmark::DoNotOptimize(t_group(H, entries).order);
  state.SetLabel(G->name());
}
BENCHMARK(BM_TGroup)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_BruteNormalizer(benchmark::State& state) {
  const auto G = elaborate(*parse_group_expression("C2*C2*C2"));
  const auto lam = lambda_perms(*G);
  for (auto _ : state) benchmark::DoNotOptimize(brute_normalizer(8, lam).order());
}
BENCHMARK(BM_BruteNormalizer)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
