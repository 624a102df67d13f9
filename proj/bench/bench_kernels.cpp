#include <benchmark/benchmark.h>

#include "sympcliff/fock.hpp"
#include "sympcliff/kernels.hpp"

using namespace sympcliff;

namespace {

CMatrix test_matrix(std::size_t n) {
  return fock_hermitian_part(QuadPoly{1, 2, 3}, n).entries;
}

void BM_MatmulSerial(benchmark::State& state) {
  CMatrix a = test_matrix(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::matmul_serial(a, a));
}

void BM_MatmulParallel(benchmark::State& state) {
  CMatrix a = test_matrix(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::matmul_parallel(a, a));
}

void BM_KronSerial(benchmark::State& state) {
  CMatrix a = test_matrix(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::kron_serial(a, a));
}

void BM_KronParallel(benchmark::State& state) {
  CMatrix a = test_matrix(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::kron_parallel(a, a));
}

void BM_JacobiSerial(benchmark::State& state) {
  CMatrix a = test_matrix(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::hermitian_eigenvalues_serial(a));
}

void BM_JacobiParallel(benchmark::State& state) {
  CMatrix a = test_matrix(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::hermitian_eigenvalues_parallel(a));
}

void BM_TensorQuantize(benchmark::State& state) {
  std::vector<QuadPoly> fs(3, QuadPoly{1, 1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(tensor_quantize(fs, state.range(0)));
}

}  // namespace

BENCHMARK(BM_MatmulSerial)->Arg(32)->Arg(128)->Arg(256);
BENCHMARK(BM_MatmulParallel)->Arg(32)->Arg(128)->Arg(256);
BENCHMARK(BM_KronSerial)->Arg(16)->Arg(32);
BENCHMARK(BM_KronParallel)->Arg(16)->Arg(32);
BENCHMARK(BM_JacobiSerial)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_JacobiParallel)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_TensorQuantize)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
