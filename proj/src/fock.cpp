#include "sympcliff/fock.hpp"

#include <cmath>
#include <string>

#include "sympcliff/error.hpp"

namespace sympcliff {

FockMatrix::FockMatrix(std::size_t d, CMatrix e) : dim(d), entries(std::move(e)) {
  if (dim < kMinFockDim) throw DomainError("Fock dimension must be at least 3, got " + std::to_string(dim));
  if (entries.rows() != dim || entries.cols() != dim) throw DomainError("Fock matrix shape mismatch");
}

bool FockMatrix::is_hermitian(double tol) const { return (entries - entries.adjoint()).max_abs() <= tol; }

namespace {
void require_dim(std::size_t n) {
  if (n < kMinFockDim) throw DomainError("Fock dimension must be at least 3, got " + std::to_string(n));
}
}  // namespace

CMatrix annihilation(std::size_t n) {
  CMatrix a(n, n);
  for (std::size_t k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

CMatrix fock_q(std::size_t n) {
  CMatrix a = annihilation(n);
  return (a + a.adjoint()) * Complex(1.0 / std::sqrt(2.0));
}

CMatrix fock_p(std::size_t n) {
  CMatrix a = annihilation(n);
  return (a.adjoint() - a) * Complex(0.0, 1.0 / std::sqrt(2.0));
}

FockMatrix fock_realize(const WeylElement& w, std::size_t n) {
  require_dim(n);
  auto sym = to_symmetric_basis(w);
  CMatrix out(n, n);
  if (sym.empty()) return FockMatrix(n, out);
  int max_a = 0, max_b = 0;
  for (const auto& [ab, c] : sym) {
    max_a = std::max(max_a, ab.first);
    max_b = std::max(max_b, ab.second);
  }
  const CMatrix q = fock_q(n), p = fock_p(n);
  // words[a][b]: sum of all words with a factors q and b factors p.
  std::vector<std::vector<CMatrix>> words(max_a + 1, std::vector<CMatrix>(max_b + 1));
  words[0][0] = CMatrix::identity(n);
  for (int a = 0; a <= max_a; ++a)
    for (int b = 0; b <= max_b; ++b) {
      if (a == 0 && b == 0) continue;
      CMatrix s(n, n);
      if (a > 0) s += words[a - 1][b] * q;
      if (b > 0) s += words[a][b - 1] * p;
      words[a][b] = std::move(s);
    }
  for (const auto& [ab, c] : sym) {
    auto [a, b] = ab;
    double count = 1;  // C(a+b, a)
    for (int k = 1; k <= b; ++k) count = count * (a + k) / k;
    out += words[a][b] * (to_complex_f64(c) / count);
  }
  return FockMatrix(n, out);
}

FockMatrix fock_quantize(const QuadPoly& f, std::size_t n) { return fock_realize(weyl_quantize(f), n); }

FockMatrix fock_hermitian_part(const QuadPoly& f, std::size_t n) { return fock_realize(hermitian_part(f), n); }

std::vector<double> spectrum(const QuadPoly& f, std::size_t n) {
  return kernels::hermitian_eigenvalues_serial(fock_hermitian_part(f, n).entries).eigenvalues;
}

std::vector<double> hermitian_spectrum(const FockMatrix& m) {
  return kernels::hermitian_eigenvalues_parallel(m.entries).eigenvalues;
}

CMatrix embed_in_slot(const CMatrix& x, std::size_t slot, std::size_t slots) {
  if (slot >= slots) throw DomainError("slot index out of range");
  const std::size_t n = x.rows();
  CMatrix out = slot == 0 ? x : CMatrix::identity(n);
  for (std::size_t s = 1; s < slots; ++s) out = kernels::kron_parallel(out, s == slot ? x : CMatrix::identity(n));
  return out;
}

FockMatrix tensor_quantize(const std::vector<QuadPoly>& fs, std::size_t n) {
  require_dim(n);
  if (fs.empty()) throw DomainError("tensor_quantize needs at least one factor");
  std::size_t total = 1;
  for (std::size_t s = 0; s < fs.size(); ++s) {
    total *= n;
    if (total > kMaxTensorDim)
      throw DomainError("tensor dimension N^n exceeds the cap of " + std::to_string(kMaxTensorDim));
  }
  CMatrix out(total, total);
  for (std::size_t s = 0; s < fs.size(); ++s) {
    if (fs[s].is_zero()) continue;
    out += embed_in_slot(fock_quantize(fs[s], n).entries, s, fs.size());
  }
  return FockMatrix(total, out);
}

double poisson_commutator_defect(const QuadPoly& f, const QuadPoly& g, std::size_t n) {
  const CMatrix qf = fock_quantize(f, n).entries, qg = fock_quantize(g, n).entries;
  CMatrix diff = qf * qg - qg * qf - fock_quantize(pbracket(f, g), n).entries;
  return diff.max_abs(n - 2, n - 2);
}

}  // namespace sympcliff
