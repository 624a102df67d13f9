#include "sympcliff/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sympcliff/error.hpp"

namespace sympcliff {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw DomainError("matrix shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw DomainError("matrix shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
  for (auto& x : data_) x *= s;
  return *this;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

double CMatrix::max_abs(std::size_t rows, std::size_t cols) const {
  double m = 0;
  for (std::size_t r = 0; r < std::min(rows, rows_); ++r)
    for (std::size_t c = 0; c < std::min(cols, cols_); ++c) m = std::max(m, std::abs((*this)(r, c)));
  return m;
}

namespace kernels {

namespace {

void check_matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matmul: inner dimensions differ");
}

// One output row; shared by both matmul variants so they agree bitwise.
void matmul_row(const CMatrix& a, const CMatrix& b, CMatrix& out, std::size_t i) {
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Complex aik = a(i, k);
    if (aik == Complex(0)) continue;
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
  }
}

void kron_row(const CMatrix& a, const CMatrix& b, CMatrix& out, std::size_t r) {
  std::size_t ia = r / b.rows(), ib = r % b.rows();
  for (std::size_t ja = 0; ja < a.cols(); ++ja)
    for (std::size_t jb = 0; jb < b.cols(); ++jb) out(r, ja * b.cols() + jb) = a(ia, ja) * b(ib, jb);
}

struct Rotation {
  std::size_t p, q;
  double c, s;
  Complex phase;  // e^{-i phi} where a_pq = |a_pq| e^{i phi}
  double t_abs;   // t * |a_pq|
};

// Rotation zeroing h(p, q), or nullopt-like flag when already zero.
bool make_rotation(const CMatrix& h, std::size_t p, std::size_t q, Rotation& rot) {
  const Complex b = h(p, q);
  const double mag = std::abs(b);
  if (mag == 0.0) return false;
  const double theta = (h(q, q).real() - h(p, p).real()) / (2.0 * mag);
  double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (!std::isfinite(theta)) t = 0.5 / theta;  // |theta| huge: t ~ 1/(2 theta)
  rot.p = p;
  rot.q = q;
  rot.c = 1.0 / std::sqrt(t * t + 1.0);
  rot.s = t * rot.c;
  rot.phase = std::conj(b) / mag;
  rot.t_abs = t * mag;
  return true;
}

// h <- h U, U = D R restricted to columns p, q.
void rotate_columns(CMatrix& h, const Rotation& r) {
  for (std::size_t k = 0; k < h.rows(); ++k) {
    Complex hp = h(k, r.p), hq = h(k, r.q) * r.phase;
    h(k, r.p) = r.c * hp - r.s * hq;
    h(k, r.q) = r.s * hp + r.c * hq;
  }
}

// h <- U^+ h restricted to rows p, q.
void rotate_rows(CMatrix& h, const Rotation& r) {
  const Complex ph = std::conj(r.phase);
  for (std::size_t k = 0; k < h.cols(); ++k) {
    Complex hp = h(r.p, k), hq = h(r.q, k) * ph;
    h(r.p, k) = r.c * hp - r.s * hq;
    h(r.q, k) = r.s * hp + r.c * hq;
  }
}

// Exact cleanup of the pivot block after a rotation.
void settle_pivot(CMatrix& h, const Rotation& r, double app, double aqq) {
  h(r.p, r.q) = 0.0;
  h(r.q, r.p) = 0.0;
  h(r.p, r.p) = app - r.t_abs;
  h(r.q, r.q) = aqq + r.t_abs;
}

double off_norm(const CMatrix& h) {
  double s = 0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (i != j) s += std::norm(h(i, j));
  return std::sqrt(s);
}

CMatrix prepare(const CMatrix& h) {
  if (h.rows() != h.cols()) throw DomainError("eigenvalues: matrix is not square");
  CMatrix a = h;
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) = a(i, i).real();
  return a;
}

JacobiResult finish(const CMatrix& a, int sweeps, double off) {
  JacobiResult r{{}, sweeps, off};
  for (std::size_t i = 0; i < a.rows(); ++i) r.eigenvalues.push_back(a(i, i).real());
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end());
  return r;
}

[[noreturn]] void fail_convergence(double off) {
  throw ConvergenceError("Jacobi iteration did not converge in " + std::to_string(kJacobiMaxSweeps) +
                         " sweeps (off-diagonal norm " + std::to_string(off) + ")");
}

}  // namespace

CMatrix matmul_serial(const CMatrix& a, const CMatrix& b) {
  check_matmul(a, b);
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) matmul_row(a, b, out, i);
  return out;
}

CMatrix matmul_parallel(const CMatrix& a, const CMatrix& b) {
  check_matmul(a, b);
  CMatrix out(a.rows(), b.cols());
  const auto n = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static) if (n >= 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) matmul_row(a, b, out, static_cast<std::size_t>(i));
  return out;
}

CMatrix kron_serial(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t r = 0; r < out.rows(); ++r) kron_row(a, b, out, r);
  return out;
}

CMatrix kron_parallel(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  const auto n = static_cast<std::ptrdiff_t>(out.rows());
#pragma omp parallel for schedule(static) if (n >= 64)
  for (std::ptrdiff_t r = 0; r < n; ++r) kron_row(a, b, out, static_cast<std::size_t>(r));
  return out;
}

JacobiResult hermitian_eigenvalues_serial(const CMatrix& h) {
  CMatrix a = prepare(h);
  const std::size_t n = a.rows();
  double off = off_norm(a);
  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off < kJacobiTolerance) return finish(a, sweep, off);
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        Rotation rot;
        if (!make_rotation(a, p, q, rot)) continue;
        double app = a(p, p).real(), aqq = a(q, q).real();
        rotate_columns(a, rot);
        rotate_rows(a, rot);
        settle_pivot(a, rot, app, aqq);
      }
    off = off_norm(a);
  }
  if (off < kJacobiTolerance) return finish(a, kJacobiMaxSweeps, off);
  fail_convergence(off);
}

JacobiResult hermitian_eigenvalues_parallel(const CMatrix& h) {
  CMatrix a = prepare(h);
  const std::size_t n = a.rows();
  // Round-robin schedule over m = n rounded up to even players; player m-1 is
  // a bye when n is odd.
  const std::size_t m = n + (n % 2);
  std::vector<std::size_t> players(m);
  double off = off_norm(a);
  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off < kJacobiTolerance) return finish(a, sweep, off);
    for (std::size_t i = 0; i < m; ++i) players[i] = i;
    for (std::size_t round = 0; round + 1 < m; ++round) {
      std::vector<Rotation> rots;
      std::vector<std::pair<double, double>> diag;
      for (std::size_t k = 0; k < m / 2; ++k) {
        std::size_t p = players[k], q = players[m - 1 - k];
        if (p > q) std::swap(p, q);
        if (q >= n) continue;
        Rotation rot;
        if (make_rotation(a, p, q, rot)) {
          rots.push_back(rot);
          diag.emplace_back(a(p, p).real(), a(q, q).real());
        }
      }
      const auto nr = static_cast<std::ptrdiff_t>(rots.size());
#pragma omp parallel if (n >= 64)
      {
#pragma omp for schedule(static)
        for (std::ptrdiff_t k = 0; k < nr; ++k) rotate_columns(a, rots[k]);
#pragma omp for schedule(static)
        for (std::ptrdiff_t k = 0; k < nr; ++k) rotate_rows(a, rots[k]);
#pragma omp for schedule(static)
        for (std::ptrdiff_t k = 0; k < nr; ++k) settle_pivot(a, rots[k], diag[k].first, diag[k].second);
      }
      std::rotate(players.begin() + 1, players.end() - 1, players.end());
    }
    off = off_norm(a);
  }
  if (off < kJacobiTolerance) return finish(a, kJacobiMaxSweeps, off);
  fail_convergence(off);
}

}  // namespace kernels
}  // namespace sympcliff
