// Serial reference against the OpenMP kernels. Thread count follows
// OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fracalg/convalg.hpp"
#include "fracalg/fracint.hpp"
#include "fracalg/kernels.hpp"
#include "fracalg/stieltjes.hpp"

using namespace fracalg;

namespace {

std::vector<double> random_lower(std::size_t dim, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> L(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j <= i; ++j) L[i * dim + j] = u(rng);
  return L;
}

template <bool Parallel>
void BM_matvec(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto A = random_lower(dim, 1);
  std::vector<double> x(dim, 1.0), y(dim);
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::parallel::lower_matvec(A, dim, x, y);
    } else {
      kernels::serial::lower_matvec(A, dim, x, y);
    }
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(dim * (dim + 1) / 2));
}

template <bool Parallel>
void BM_matmul(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto A = random_lower(dim, 2);
  const auto B = random_lower(dim, 3);
  std::vector<double> C(dim * dim);
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::parallel::lower_matmul(A, B, dim, C);
    } else {
      kernels::serial::lower_matmul(A, B, dim, C);
    }
    benchmark::DoNotOptimize(C.data());
  }
}

template <Exec E>
void BM_rl_weights(benchmark::State& state) {
  const auto g = build_grid(0.0, 1.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rl_weights(FracOrder(0.5), g, E));
}

template <Exec E>
void BM_stieltjes_weights(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = build_grid(0.0, 1.0, n);
  const auto h = make_integrator("exp", 0.0, 1.0, n);
  for (auto _ : state) benchmark::DoNotOptimize(stieltjes_weights(FracOrder(0.5), h, g, E));
}

void BM_convolve(benchmark::State& state) {
  const auto g = build_grid(0.0, 1.0, static_cast<std::size_t>(state.range(0)));
  const auto f = SampledFunction::sample(g, [](double t) { return t; });
  for (auto _ : state) benchmark::DoNotOptimize(convolve(f, f));
}

}  // namespace

BENCHMARK(BM_matvec<false>)->Name("matvec/serial")->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK(BM_matvec<true>)->Name("matvec/parallel")->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK(BM_matmul<false>)->Name("matmul/serial")->RangeMultiplier(2)->Range(128, 512);
BENCHMARK(BM_matmul<true>)->Name("matmul/parallel")->RangeMultiplier(2)->Range(128, 512);
BENCHMARK(BM_rl_weights<Exec::serial>)->Name("rl_weights/serial")->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK(BM_rl_weights<Exec::parallel>)->Name("rl_weights/parallel")->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK(BM_stieltjes_weights<Exec::serial>)->Name("stieltjes_weights/serial")->RangeMultiplier(4)->Range(256, 1024);
BENCHMARK(BM_stieltjes_weights<Exec::parallel>)->Name("stieltjes_weights/parallel")->RangeMultiplier(4)->Range(256, 1024);
BENCHMARK(BM_convolve)->Name("convolve")->RangeMultiplier(4)->Range(256, 4096);

BENCHMARK_MAIN();
