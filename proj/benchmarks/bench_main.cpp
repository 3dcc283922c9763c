#include <benchmark/benchmark.h>

#include <random>

#include "idio/coates.hpp"
#include "idio/hemimorphy.hpp"
#include "idio/matrix.hpp"
#include "idio/spectral.hpp"
#include "idio/stockmeyer.hpp"

using namespace idio;

namespace {

Digraph random_digraph(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  Digraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && coin(rng)) g.add_arc(u, v);
  return g;
}

void BM_Idiosyncratic(benchmark::State& state) {
  const Digraph g = random_digraph(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(idiosyncratic(g));
}
BENCHMARK(BM_Idiosyncratic)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_CharpolyFaddeev(benchmark::State& state) {
  const PolyMatrix m = generalized_adjacency(random_digraph(static_cast<std::size_t>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_faddeev_leverrier(m));
}
BENCHMARK(BM_CharpolyFaddeev)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

// 65 x 65 at n = 6.
void BM_StockmeyerDeterminant(benchmark::State& state) {
  const Digraph b = stockmeyer_B(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(adjacency_determinant(b));
}
BENCHMARK(BM_StockmeyerDeterminant)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_HamiltonianCensusA4(benchmark::State& state) {
  const Digraph a = stockmeyer_A(4);
  const auto odd = stockmeyer_A_odd_labels(4);
  for (auto _ : state) benchmark::DoNotOptimize(hamiltonian_census(a, odd));
}
BENCHMARK(BM_HamiltonianCensusA4)->Unit(benchmark::kMillisecond);

void BM_Deck3(benchmark::State& state) {
  const Digraph g = random_digraph(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(idio_deck(g, 3));
}
BENCHMARK(BM_Deck3)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Hemimorphic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Digraph g = random_digraph(n, 3);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = (i * 5 + 1) % n;
  Digraph h(n);
  for (auto [u, v] : converse(g).arcs()) h.add_arc(perm[u], perm[v]);
  for (auto _ : state) benchmark::DoNotOptimize(are_hemimorphic(g, h));
}
BENCHMARK(BM_Hemimorphic)->Arg(8)->Arg(16)->Arg(32);

void BM_CounterexampleDeck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_counterexample(static_cast<std::size_t>(state.range(0)), 1));
}
BENCHMARK(BM_CounterexampleDeck)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
