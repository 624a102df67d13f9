#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "sympcliff/error.hpp"
#include "sympcliff/kernels.hpp"

using namespace sympcliff;

namespace {
CMatrix random_matrix(Xoshiro256& rng, std::size_t r, std::size_t c) {
  CMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = Complex(static_cast<double>(rng.uniform(-1000, 1000)) / 100, static_cast<double>(rng.uniform(-1000, 1000)) / 100);
  return m;
}

CMatrix random_hermitian(Xoshiro256& rng, std::size_t n) {
  CMatrix m = random_matrix(rng, n, n);
  return (m + m.adjoint()) * Complex(0.5, 0);
}
}  // namespace

TEST_CASE("matmul serial and parallel agree bitwise") {
  Xoshiro256 rng(81);
  for (int t = 0; t < 20; ++t) {
    std::size_t a = rng.uniform(1, 20), b = rng.uniform(1, 20), c = rng.uniform(1, 20);
    CMatrix x = random_matrix(rng, a, b), y = random_matrix(rng, b, c);
    CMatrix s = kernels::matmul_serial(x, y), p = kernels::matmul_parallel(x, y);
    REQUIRE(s.data() == p.data());
    // Naive triple loop oracle.
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t k = 0; k < c; ++k) {
        Complex acc = 0;
        for (std::size_t j = 0; j < b; ++j) acc += x(i, j) * y(j, k);
        REQUIRE(std::abs(acc - s(i, k)) < 1e-9);
      }
  }
  CHECK_THROWS_AS(kernels::matmul_serial(CMatrix(2, 3), CMatrix(2, 3)), DomainError);
}

TEST_CASE("kron serial and parallel agree") {
  Xoshiro256 rng(83);
  CMatrix a = random_matrix(rng, 3, 2), b = random_matrix(rng, 2, 4);
  CMatrix s = kernels::kron_serial(a, b);
  CHECK(s.data() == kernels::kron_parallel(a, b).data());
  CHECK(s.rows() == 6);
  CHECK(s.cols() == 8);
  CHECK(s(4, 5) == a(2, 1) * b(0, 1));
}

TEST_CASE("Jacobi serial and parallel agree") {
  Xoshiro256 rng(85);
  for (int t = 0; t < 15; ++t) {
    std::size_t n = rng.uniform(1, 24);
    CMatrix h = random_hermitian(rng, n);
    auto s = kernels::hermitian_eigenvalues_serial(h);
    auto p = kernels::hermitian_eigenvalues_parallel(h);
    REQUIRE(s.eigenvalues.size() == n);
    REQUIRE(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
    CHECK(s.off_norm < kernels::kJacobiTolerance);
    CHECK(p.off_norm < kernels::kJacobiTolerance);
    double trace = 0, sum = 0;
    for (std::size_t i = 0; i < n; ++i) trace += h(i, i).real();
    for (double x : s.eigenvalues) sum += x;
    CHECK(std::abs(trace - sum) < 1e-9);
    for (std::size_t i = 0; i < n; ++i) REQUIRE(std::abs(s.eigenvalues[i] - p.eigenvalues[i]) < 1e-9);
  }
  CHECK_THROWS_AS(kernels::hermitian_eigenvalues_serial(CMatrix(2, 3)), DomainError);
}

TEST_CASE("Jacobi on a diagonal matrix needs no sweeps") {
  CMatrix d(3, 3);
  d(0, 0) = 3;
  d(1, 1) = -1;
  d(2, 2) = 2;
  auto r = kernels::hermitian_eigenvalues_serial(d);
  CHECK(r.eigenvalues == std::vector<double>{-1, 2, 3});
  CHECK(r.sweeps == 0);
}
