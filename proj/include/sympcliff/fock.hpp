#pragma once

#include <cstddef>
#include <vector>

#include "sympcliff/kernels.hpp"
#include "sympcliff/poisson.hpp"
#include "sympcliff/weyl.hpp"

namespace sympcliff {

/// Operator on the span of the first N oscillator number states |0>..|N-1>
/// (or a tensor product of such spaces).
struct FockMatrix {
  std::size_t dim;
  CMatrix entries;

  /// Throws DomainError unless dim >= 3 and entries is dim x dim.
  FockMatrix(std::size_t dim, CMatrix entries);

  bool is_hermitian(double tol = 1e-12) const;
};

inline constexpr std::size_t kMinFockDim = 3;
inline constexpr std::size_t kMaxTensorDim = 4096;

/// Truncated ladder operator a|n> = sqrt(n)|n-1>.
CMatrix annihilation(std::size_t n);
/// q^ = (a + a^+)/sqrt(2), p^ = i(a^+ - a)/sqrt(2), truncated to N levels.
CMatrix fock_q(std::size_t n);
CMatrix fock_p(std::size_t n);

/// Realizes w on N levels. Each monomial is expanded in the Weyl-symmetric
/// basis and W_{a,b} is built as the average of all words in the truncated
/// q^, p^, so Hermitian elements map to Hermitian matrices. Throws
/// DomainError for N < 3.
FockMatrix fock_realize(const WeylElement& w, std::size_t n);

/// Q_N(f) = fock_realize(weyl_quantize(f), N).
FockMatrix fock_quantize(const QuadPoly& f, std::size_t n);

/// i * Q_N(f), Hermitian.
FockMatrix fock_hermitian_part(const QuadPoly& f, std::size_t n);

/// Sorted eigenvalues of i * Q_N(f), by serial cyclic Jacobi.
std::vector<double> spectrum(const QuadPoly& f, std::size_t n);

/// Sorted eigenvalues of a Hermitian Fock matrix (parallel Jacobi).
std::vector<double> hermitian_spectrum(const FockMatrix& m);

/// sum_s I x..x Q_N(f_s) x..x I on N^n levels. Throws DomainError for an
/// empty list, N < 3, or N^n > kMaxTensorDim.
FockMatrix tensor_quantize(const std::vector<QuadPoly>& fs, std::size_t n);

/// X in slot s (0-based) of `slots` factors, identity elsewhere.
CMatrix embed_in_slot(const CMatrix& x, std::size_t slot, std::size_t slots);

/// max |([Q_N f, Q_N g] - Q_N {f,g})_{ij}| over the leading (N-2) x (N-2) block.
double poisson_commutator_defect(const QuadPoly& f, const QuadPoly& g, std::size_t n);

}  // namespace sympcliff
