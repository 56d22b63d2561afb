#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "symapprox/reliability.hpp"
#include "symapprox/symmetric_approximation.hpp"

using namespace symapprox;

namespace {

PseudoBooleanFunction random_table(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(cube_size(n));
  for (double& x : v) x = dist(rng);
  return {n, std::move(v)};
}

void BM_Moebius(benchmark::State& state) {
  const auto f = random_table(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(moebius_transform(f));
}
BENCHMARK(BM_Moebius)->DenseRange(8, 20, 4);

void BM_InverseMoebius(benchmark::State& state) {
  const auto m = moebius_transform(random_table(static_cast<int>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(inverse_moebius(m));
}
BENCHMARK(BM_InverseMoebius)->DenseRange(8, 20, 4);

void BM_ClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = random_table(n, 3);
  const auto w = uniform_weights(n);
  for (auto _ : state) benchmark::DoNotOptimize(best_symmetric_approximation(f, w));
}
BENCHMARK(BM_ClosedForm)->DenseRange(4, 20, 4);

void BM_GramOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = random_table(n, 3);
  const auto w = uniform_weights(n);
  const auto basis = order_statistic_basis(n);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_projection(f, w, basis));
}
BENCHMARK(BM_GramOracle)->DenseRange(4, 12, 4);

void BM_SignatureExact(benchmark::State& state) {
  const auto phi = systems::k_out_of_n(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(signature_exact(phi));
}
BENCHMARK(BM_SignatureExact)->Arg(5)->Arg(10)->Arg(16);

void BM_SignatureMonteCarlo(benchmark::State& state) {
  const auto phi = systems::bridge();
  for (auto _ : state) {
    benchmark::DoNotOptimize(signature_monte_carlo(phi, static_cast<std::uint64_t>(state.range(0)), 7));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SignatureMonteCarlo)->Arg(65536)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
