#pragma once

#include <array>
#include <string>
#include <utility>

#include "sympcliff/quaternion.hpp"
#include "sympcliff/scalars.hpp"

namespace sympcliff {

/// 2x2 rational matrix, an element of End F. Composition is the matrix
/// product X*Y (apply Y first).
struct Endo2 {
  std::array<std::array<Rational, 2>, 2> m{};

  static Endo2 from(Rational a, Rational b, Rational c, Rational d) {
    return Endo2{{{{std::move(a), std::move(b)}, {std::move(c), std::move(d)}}}};
  }
  static Endo2 id() { return from(1, 0, 0, 1); }
  static Endo2 J() { return from(0, 1, -1, 0); }
  static Endo2 A() { return from(1, 0, 0, -1); }
  static Endo2 B() { return from(0, 1, 1, 0); }
  static Endo2 zero() { return from(0, 0, 0, 0); }

  const Rational& operator()(int r, int c) const { return m[r][c]; }
  Rational& operator()(int r, int c) { return m[r][c]; }

  Rational trace() const { return m[0][0] + m[1][1]; }
  Rational det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  Endo2 transpose() const { return from(m[0][0], m[1][0], m[0][1], m[1][1]); }
  Endo2 inverse() const;
  bool is_zero() const;

  Endo2& operator+=(const Endo2& o);
  Endo2& operator-=(const Endo2& o);
  Endo2& operator*=(const Rational& s);
  friend Endo2 operator+(Endo2 a, const Endo2& b) { return a += b; }
  friend Endo2 operator-(Endo2 a, const Endo2& b) { return a -= b; }
  friend Endo2 operator*(Endo2 a, const Rational& s) { return a *= s; }
  friend Endo2 operator*(const Rational& s, Endo2 a) { return a *= s; }
  friend Endo2 operator*(const Endo2& a, const Endo2& b);
  Endo2 operator-() const { return *this * Rational(-1); }
  friend bool operator==(const Endo2&, const Endo2&) = default;

  /// "[[a, b], [c, d]]".
  std::string to_string() const;
};

inline Endo2 commutator(const Endo2& x, const Endo2& y) { return x * y - y * x; }

enum class EndfBasis { Id, J, A, B };
inline constexpr std::array<EndfBasis, 4> kEndfBasis = {EndfBasis::Id, EndfBasis::J, EndfBasis::A,
                                                        EndfBasis::B};

Endo2 basis_matrix(EndfBasis b);
std::string basis_name(EndfBasis b);

/// +/- a basis element; the value type of the End F multiplication table.
struct SignedBasis {
  int sign = 1;
  EndfBasis basis = EndfBasis::Id;
  friend bool operator==(const SignedBasis&, const SignedBasis&) = default;
  std::string to_string() const { return (sign < 0 ? "-" : "") + basis_name(basis); }
};

/// Stored multiplication table of id, J, A, B (row * column).
SignedBasis endf_table(EndfBasis x, EndfBasis y);

/// Recognises +/- a basis matrix; throws DomainError otherwise.
SignedBasis as_signed_basis(const Endo2& m);

/// <X, Y> = 1/2 tr(X Y~), Y~ the transpose (adjoint for the identity form).
Rational trace_inner(const Endo2& x, const Endo2& y);

/// Coordinates in End F = R id + R J + Sigma, Sigma = span{A, B}.
struct SpDecomposition {
  Rational trace_part;
  Rational j_part;
  std::pair<Rational, Rational> sigma_part;  // (a, c) for a*A + c*B

  Endo2 reconstruct() const;
  Endo2 sigma_matrix() const;
  friend bool operator==(const SpDecomposition&, const SpDecomposition&) = default;
};

SpDecomposition decompose_endf(const Endo2& m);

bool in_sp(const Endo2& m);
bool in_sigma(const Endo2& m);

/// omega_Sigma(X, Y) = < 1/2 [X, Y], J >. Throws unless X, Y lie in Sigma.
Rational omega_sigma(const Endo2& x, const Endo2& y);

/// Oriented cross product on sp(F) for the trace scalar product, with
/// (A, B, J) a positively oriented orthonormal basis. Agrees with 1/2 [X, Y]
/// for X, Y in Sigma.
Endo2 sp_cross(const Endo2& x, const Endo2& y);

/// Element lambda*id + v of the quaternion skew-field H_sp(F).
struct HspElement {
  Rational scalar;
  Endo2 vec = Endo2::zero();  // traceless
  friend bool operator==(const HspElement&, const HspElement&) = default;
};

/// Quaternion product with dot = trace_inner and cross = sp_cross.
/// Throws DomainError if a vector part is not traceless.
HspElement hsp_product(const HspElement& x, const HspElement& y);

/// H_F -> H_sp(F): e -> id, i -> J, j -> A, k -> B.
HspElement quaternion_to_hsp(const Quaternion& q);
Quaternion hsp_to_quaternion(const HspElement& x);

}  // namespace sympcliff
