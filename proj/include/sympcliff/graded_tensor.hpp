#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sympcliff/poisson.hpp"
#include "sympcliff/scalars.hpp"

namespace sympcliff {

/// Basis symbol of one factor H_{F_s}: e, e_q, e_p or j.
/// e and j are even (they span C^j), e_q and e_p are odd (they span F_s).
enum class Slot : std::uint8_t { E = 0, Q = 1, P = 2, J = 3 };

inline bool is_odd(Slot s) { return s == Slot::Q || s == Slot::P; }
std::string slot_name(Slot s);

/// Product of two basis symbols inside one factor: (sign, symbol).
/// e_q e_p = j, e_p j = e_q, j e_q = e_p, squares of e_q, e_p, j are -e.
std::pair<int, Slot> slot_product(Slot a, Slot b);

/// Element of the graded tensor product of n copies of H (dimension 4^n).
class GradedTensorElement {
 public:
  static constexpr int kMaxFactors = 16;
  using Key = std::uint32_t;  // 2 bits per factor, factor s at bits 2s..2s+1

  explicit GradedTensorElement(int n);
  static GradedTensorElement unit(int n);
  static GradedTensorElement basis(const std::vector<Slot>& slots, Rational coeff = 1);

  int factors() const { return n_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coeff * basis element; drops entries that cancel to zero.
  void add_term(Key key, const Rational& coeff);
  Rational coefficient(const std::vector<Slot>& slots) const;

  GradedTensorElement& operator+=(const GradedTensorElement& o);
  GradedTensorElement& operator-=(const GradedTensorElement& o);
  GradedTensorElement& operator*=(const Rational& s);
  friend GradedTensorElement operator+(GradedTensorElement a, const GradedTensorElement& b) { return a += b; }
  friend GradedTensorElement operator-(GradedTensorElement a, const GradedTensorElement& b) { return a -= b; }
  friend GradedTensorElement operator*(GradedTensorElement a, const Rational& s) { return a *= s; }
  friend bool operator==(const GradedTensorElement&, const GradedTensorElement&) = default;

  /// e.g. "e_q⊗e - 2*e⊗j".
  std::string to_string() const;

  static Key encode(const std::vector<Slot>& slots);
  static std::vector<Slot> decode(Key key, int n);

 private:
  int n_;
  std::map<Key, Rational> terms_;
};

/// Graded tensor product:
///   (a_1 x..x a_n)(b_1 x..x b_n) = (-1)^sigma (a_1 b_1) x..x (a_n b_n),
///   sigma = sum over s > r of |a_s| |b_r|.
/// Throws DomainError if the factor counts differ.
GradedTensorElement graded_mul(const GradedTensorElement& x, const GradedTensorElement& y);
inline GradedTensorElement operator*(const GradedTensorElement& x, const GradedTensorElement& y) {
  return graded_mul(x, y);
}

/// e x..x v x..x e with v (e_q or e_p) in factor `slot` (1-based).
GradedTensorElement embed_generator(int slot, Slot v, int n);

/// c with uv + vu = c * unit for embedded generators u, v; c = -2<u, v>.
Rational clifford_relation_check(const GradedTensorElement& u, const GradedTensorElement& v);

/// Image of a basis symbol in H_Q under the grading-preserving identification
/// e_q -> A, e_p -> B, j -> J of H_F with H_sp(F), pulled back by ham:
///   e -> e, e_q -> qp, e_p -> (p^2 - q^2)/2, j -> (q^2 + p^2)/2.
PoissonCliffordElement slot_to_poisson(Slot s);

/// Renders an element of the product of H_F factors as one of the product of
/// H_Q factors, relabelling every factor through slot_to_poisson.
std::string to_poisson_clifford_string(const GradedTensorElement& x);

/// Quadratic form on the 2n-dimensional phase space; variables are indexed
/// 2(s-1) for q_s and 2(s-1)+1 for p_s, keys (a, b) with a <= b.
using QuadraticForm2n = std::map<std::pair<int, int>, Rational>;
std::string to_string(const QuadraticForm2n& form);

/// Linear surjection from the natural subspace of the tensor algebra onto the
/// homogeneous quadratic polynomials on the 2n-dimensional phase space:
///   u at slot s, v at slot r (s != r, u, v generators) -> u_s * v_r,
///   a single pure symbol at slot s -> its slot_to_poisson image in (q_s, p_s).
/// Throws DomainError if x has components outside that subspace.
QuadraticForm2n quadratic_image(const GradedTensorElement& x);

}  // namespace sympcliff
