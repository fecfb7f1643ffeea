#include <benchmark/benchmark.h>

#include <random>

#include "cyclext/catalog.hpp"
#include "cyclext/cycle_oracle.hpp"
#include "cyclext/generators.hpp"
#include "cyclext/harness.hpp"
#include "cyclext/isomorphism.hpp"
#include "cyclext/matcher.hpp"
#include "cyclext/recognizer.hpp"

using namespace cyclext;

namespace {

// Probe samples that meet the hypotheses, so the matcher has dense hosts.
std::vector<Graph> in_hypothesis_hosts(std::size_t n, std::size_t count) {
  std::vector<Graph> out;
  for (std::uint64_t k = 0; out.size() < count; ++k) {
    Graph g = sample_graph(n, 1, k);
    if (check_hypotheses(g).all()) out.push_back(std::move(g));
  }
  return out;
}

void BM_ContainsForbidden(benchmark::State& state) {
  const auto hosts = in_hypothesis_hosts(static_cast<std::size_t>(state.range(0)), 64);
  catalog();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(contains_forbidden(hosts[i++ % hosts.size()]));
}
BENCHMARK(BM_ContainsForbidden)->Arg(9)->Arg(12);

void BM_Classify(benchmark::State& state) {
  const auto hosts = in_hypothesis_hosts(12, 64);
  catalog();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify(hosts[i++ % hosts.size()]));
}
BENCHMARK(BM_Classify);

void BM_FceSubsetDp(benchmark::State& state) {
  const Graph g = strong_product_path_k2(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(is_fully_cycle_extendable(g, {kDefaultBudget * 100, FceMethod::subset_dp}));
}
BENCHMARK(BM_FceSubsetDp)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_FceCycleEnumeration(benchmark::State& state) {
  const Graph g = strong_product_path_k2(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(is_fully_cycle_extendable(g, {kDefaultBudget * 100, FceMethod::cycle_enumeration}));
}
BENCHMARK(BM_FceCycleEnumeration)->DenseRange(4, 6, 1)->Unit(benchmark::kMillisecond);

void BM_Hamiltonian(benchmark::State& state) {
  const Graph g = strong_product_path_k2(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_hamiltonian(g));
}
BENCHMARK(BM_Hamiltonian)->Arg(8)->Arg(16)->Arg(30);

void BM_CanonicalGraph6(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<Graph> gs;
  for (int k = 0; k < 32; ++k) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    gs.push_back(g);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_graph6(gs[i++ % gs.size()]));
}
BENCHMARK(BM_CanonicalGraph6)->Arg(8)->Arg(16)->Arg(32);

void BM_Probe(benchmark::State& state) {
  catalog();
  for (auto _ : state)
    benchmark::DoNotOptimize(random_probe(static_cast<std::size_t>(state.range(0)), 200, 7));
  state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(BM_Probe)->DenseRange(9, 12, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
