#pragma once

#include <map>
#include <string>
#include <utility>

#include "sympcliff/poisson.hpp"
#include "sympcliff/scalars.hpp"

namespace sympcliff {

/// Element of the Weyl algebra generated by q^, p^ with q^ p^ - p^ q^ = i,
/// stored in normal order: sum of c_{m,n} q^^m p^^n.
class WeylElement {
 public:
  using Monomial = std::pair<int, int>;  // (power of q^, power of p^)

  WeylElement() = default;
  static WeylElement scalar(const GaussianRational& c);
  static WeylElement identity() { return scalar(1); }
  static WeylElement q() { return monomial(1, 0); }
  static WeylElement p() { return monomial(0, 1); }
  static WeylElement monomial(int m, int n, const GaussianRational& c = 1);

  const std::map<Monomial, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coefficient(int m, int n) const;
  /// Largest m + n over stored terms, -1 for zero.
  int degree() const;

  void add_term(int m, int n, const GaussianRational& c);

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const GaussianRational& s);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(WeylElement a, const GaussianRational& s) { return a *= s; }
  friend WeylElement operator*(const GaussianRational& s, WeylElement a) { return a *= s; }
  WeylElement operator-() const { return *this * GaussianRational(-1); }
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

  /// e.g. "-i*q̂*p̂ - 1/2".
  std::string to_string() const;

 private:
  std::map<Monomial, GaussianRational> terms_;
};

/// Associative product; p^^n q^^m is rewritten as
///   sum_k C(n,k) C(m,k) k! (-i)^k q^^(m-k) p^^(n-k).
WeylElement weyl_mul(const WeylElement& x, const WeylElement& y);
inline WeylElement operator*(const WeylElement& x, const WeylElement& y) { return weyl_mul(x, y); }
inline WeylElement weyl_commutator(const WeylElement& x, const WeylElement& y) {
  return x * y - y * x;
}

/// Formal adjoint: reverses factor order and conjugates coefficients.
WeylElement adjoint(const WeylElement& x);

/// Coefficients in the Weyl-symmetric basis W_{a,b} (the average of all
/// words with a factors q^ and b factors p^):
///   q^^m p^^n = sum_k C(m,k) C(n,k) k! (i/2)^k W_{m-k,n-k}.
std::map<WeylElement::Monomial, GaussianRational> to_symmetric_basis(const WeylElement& x);

/// Q(f) = -i * (symmetric ordering of f): Q(q^2/2) = -i q^^2/2,
/// Q(p^2/2) = -i p^^2/2, Q(qp) = -i (q^p^ + p^q^)/2. Anti-Hermitian.
WeylElement weyl_quantize(const QuadPoly& f);

/// i * Q(f), the formally Hermitian observable attached to f.
WeylElement hermitian_part(const QuadPoly& f);

/// Q extended to H_Q by e -> identity operator: lambda*e + f -> lambda + Q(f).
WeylElement quantize_clifford(const PoissonCliffordElement& x);

struct PoissonCommutatorWitness {
  bool equal;
  WeylElement lhs;         // Q({f, g})
  WeylElement rhs;         // [Q(f), Q(g)]
  WeylElement difference;  // lhs - rhs
};

/// Computes Q({f, g}) and [Q(f), Q(g)] exactly and compares them.
PoissonCommutatorWitness verify_poisson_commutator(const QuadPoly& f, const QuadPoly& g);

}  // namespace sympcliff
