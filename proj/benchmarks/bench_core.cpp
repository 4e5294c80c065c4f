#include <benchmark/benchmark.h>

#include <random>

#include "hilbertkit/decompositions.hpp"
#include "hilbertkit/norms.hpp"
#include "hilbertkit/psumming.hpp"
#include "hilbertkit/teleport.hpp"
#include "hilbertkit/tensor.hpp"

namespace {

using hilbertkit::Complex;
using hilbertkit::ComplexMatrix;

ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t m,
                            std::size_t n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = Complex(gauss(rng), gauss(rng));
  return a;
}

void BM_SvdSquare(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const ComplexMatrix a = random_matrix(rng, n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbertkit::svd(a));
  }
}
BENCHMARK(BM_SvdSquare)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_NormReport(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const ComplexMatrix a = random_matrix(rng, n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbertkit::norm_report(a));
  }
}
BENCHMARK(BM_NormReport)->Arg(8)->Arg(16);

void BM_Kron(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const ComplexMatrix a = random_matrix(rng, n, n);
  const ComplexMatrix b = random_matrix(rng, n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbertkit::kron(a, b));
  }
}
BENCHMARK(BM_Kron)->Arg(4)->Arg(8)->Arg(16);

void BM_TeleportPipeline(benchmark::State& state) {
  const hilbertkit::Ket xi = hilbertkit::make_ket({0.6, Complex(0.0, 0.8)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbertkit::teleport(xi));
  }
}
BENCHMARK(BM_TeleportPipeline);

void BM_Pi2Certify(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const ComplexMatrix a = random_matrix(rng, n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbertkit::pi2_certify(a));
  }
}
BENCHMARK(BM_Pi2Certify)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
