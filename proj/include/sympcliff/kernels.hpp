#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace sympcliff {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Complex>& data() const { return data_; }

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(Complex s);
  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }

  CMatrix adjoint() const;
  /// Largest |entry| over the leading rows x cols block.
  double max_abs(std::size_t rows, std::size_t cols) const;
  double max_abs() const { return max_abs(rows_, cols_); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Complex> data_;
};

/// Reference and OpenMP implementations of the dense kernels. The parallel
/// versions agree with the serial ones up to floating-point reassociation
/// (matmul and kron are bitwise identical; eigenvalues agree to ~1e-12).
namespace kernels {

CMatrix matmul_serial(const CMatrix& a, const CMatrix& b);
CMatrix matmul_parallel(const CMatrix& a, const CMatrix& b);

CMatrix kron_serial(const CMatrix& a, const CMatrix& b);
CMatrix kron_parallel(const CMatrix& a, const CMatrix& b);

struct JacobiResult {
  std::vector<double> eigenvalues;  // ascending
  int sweeps;
  double off_norm;  // Frobenius norm of the off-diagonal part at exit
};

inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

/// Cyclic Jacobi on a Hermitian matrix, row-by-row pivot order.
/// Throws ConvergenceError if the off-diagonal norm is not below
/// kJacobiTolerance after kJacobiMaxSweeps sweeps, DomainError if not square.
JacobiResult hermitian_eigenvalues_serial(const CMatrix& h);
/// Same iteration with round-robin pivot order: each round applies n/2
/// disjoint rotations in parallel.
JacobiResult hermitian_eigenvalues_parallel(const CMatrix& h);

}  // namespace kernels

inline CMatrix operator*(const CMatrix& a, const CMatrix& b) { return kernels::matmul_parallel(a, b); }

}  // namespace sympcliff
