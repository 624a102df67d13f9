#pragma once

#include <string>

#include "sympcliff/endf_sp.hpp"
#include "sympcliff/quaternion.hpp"
#include "sympcliff/symplectic.hpp"

namespace sympcliff {

/// cqq*q^2 + cpp*p^2 + cqp*q*p, an element of the Poisson algebra Q of
/// homogeneous quadratic polynomials on a phase plane.
struct QuadPoly {
  Rational cqq, cpp, cqp;

  static QuadPoly q2_half() { return {Rational(mpz_class(1), mpz_class(2)), 0, 0}; }
  static QuadPoly p2_half() { return {0, Rational(mpz_class(1), mpz_class(2)), 0}; }
  static QuadPoly qp() { return {0, 0, 1}; }

  bool is_zero() const { return cqq.is_zero() && cpp.is_zero() && cqp.is_zero(); }
  Rational eval(const Rational& q, const Rational& p) const;

  QuadPoly& operator+=(const QuadPoly& o);
  QuadPoly& operator-=(const QuadPoly& o);
  QuadPoly& operator*=(const Rational& s);
  friend QuadPoly operator+(QuadPoly a, const QuadPoly& b) { return a += b; }
  friend QuadPoly operator-(QuadPoly a, const QuadPoly& b) { return a -= b; }
  friend QuadPoly operator*(QuadPoly a, const Rational& s) { return a *= s; }
  friend QuadPoly operator*(const Rational& s, QuadPoly a) { return a *= s; }
  QuadPoly operator-() const { return {-cqq, -cpp, -cqp}; }
  friend bool operator==(const QuadPoly&, const QuadPoly&) = default;

  /// DSL form, e.g. "q^2/2 + q*p".
  std::string to_string() const;
};

/// Polynomial of degree <= 2 in (q, p): c0 + cq q + cp p + cqq q^2 + cpp p^2 + cqp q p.
/// Carries the linear coordinate functions f_q, f_p and DSL intermediates.
struct Poly2 {
  Rational c0, cq, cp, cqq, cpp, cqp;

  static Poly2 constant(Rational c) { return {std::move(c), 0, 0, 0, 0, 0}; }
  static Poly2 coord_q() { return {0, 1, 0, 0, 0, 0}; }
  static Poly2 coord_p() { return {0, 0, 1, 0, 0, 0}; }
  static Poly2 from(const QuadPoly& f) { return {0, 0, 0, f.cqq, f.cpp, f.cqp}; }

  int degree() const;  // -1 for the zero polynomial
  bool is_homogeneous_quadratic() const { return c0.is_zero() && cq.is_zero() && cp.is_zero(); }
  /// Throws DomainError unless homogeneous quadratic (zero allowed).
  QuadPoly to_quad() const;

  Rational eval(const Rational& q, const Rational& p) const;
  Poly2 d_dq() const { return {cq, 2 * cqq, cqp, 0, 0, 0}; }
  Poly2 d_dp() const { return {cp, cqp, 2 * cpp, 0, 0, 0}; }

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Rational& s);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(Poly2 a, const Rational& s) { return a *= s; }
  friend Poly2 operator*(const Rational& s, Poly2 a) { return a *= s; }
  /// Pointwise product; throws DomainError if the degree would exceed 2.
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  Poly2 operator-() const { return *this * Rational(-1); }
  friend bool operator==(const Poly2&, const Poly2&) = default;

  std::string to_string() const;
};

/// Principal part a_f of the Hamiltonian vector field of f in Q, as a
/// traceless matrix in the basis (e_q, e_p) (column j = image of basis vector j).
struct LinearHamField {
  Endo2 matrix;
};

/// a_f(h) = df/dp(h) e_q - df/dq(h) e_p, as a matrix:
///   ham(a q^2 + b p^2 + c qp) = [[c, 2b], [-2a, -c]].
LinearHamField ham(const QuadPoly& f);

/// Inverse of ham on sp(F). Throws DomainError for a matrix with trace != 0.
QuadPoly ham_inverse(const Endo2& x);
inline QuadPoly ham_inverse(const LinearHamField& x) { return ham_inverse(x.matrix); }

/// {f, g} = f_q g_p - f_p g_q, closed form on the monomial coefficients.
QuadPoly pbracket(const QuadPoly& f, const QuadPoly& g);

/// {f, g} by symbolic differentiation; defined on all of Poly2.
Poly2 pbracket(const Poly2& f, const Poly2& g);

/// a_f(h) as a vector of E in the basis (e_q, e_p, j).
Vector3 hamiltonian_field_at(const Poly2& f, const Coords2& h);

/// j-coefficient of a_f(h) x a_g(h). Equals {f, g}(h).
Rational hamfield_cross(const Poly2& f, const Poly2& g, const Coords2& h);

/// scalar*e + quad, an element of the Poisson Clifford algebra H_Q.
struct PoissonCliffordElement {
  Rational scalar;
  QuadPoly quad;
  friend bool operator==(const PoissonCliffordElement&, const PoissonCliffordElement&) = default;
  std::string to_string() const;
};

/// Extended ham: e -> id, f -> ham(f). An isomorphism H_Q -> H_sp(F).
HspElement ham_extended(const PoissonCliffordElement& x);
PoissonCliffordElement ham_extended_inverse(const HspElement& x);

/// Product of H_Q: the H_sp(F) product pulled back through ham.
PoissonCliffordElement pclifford_mul(const PoissonCliffordElement& x, const PoissonCliffordElement& y);

}  // namespace sympcliff
