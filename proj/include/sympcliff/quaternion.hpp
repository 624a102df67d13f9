#pragma once

#include <string>

#include "sympcliff/scalars.hpp"

namespace sympcliff {

/// Element of the oriented Euclidean 3-space E = F + R*j, in the orthonormal
/// basis {e1, e2, j} with e1 x e2 = j.
struct Vector3 {
  Rational x, y, z;

  static Vector3 e1() { return {1, 0, 0}; }
  static Vector3 e2() { return {0, 1, 0}; }
  static Vector3 j_axis() { return {0, 0, 1}; }

  bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

  Vector3& operator+=(const Vector3& o);
  Vector3& operator-=(const Vector3& o);
  Vector3& operator*=(const Rational& s);
  friend Vector3 operator+(Vector3 a, const Vector3& b) { return a += b; }
  friend Vector3 operator-(Vector3 a, const Vector3& b) { return a -= b; }
  friend Vector3 operator*(Vector3 a, const Rational& s) { return a *= s; }
  friend Vector3 operator*(const Rational& s, Vector3 a) { return a *= s; }
  Vector3 operator-() const { return {-x, -y, -z}; }
  friend bool operator==(const Vector3&, const Vector3&) = default;

  std::string to_string() const;
};

Rational dot(const Vector3& u, const Vector3& v);
Vector3 cross(const Vector3& u, const Vector3& v);

/// lambda*e + u with u in E. Product:
///   (l1 e + u1)(l2 e + u2) = (l1 l2 - <u1,u2>) e + l1 u2 + l2 u1 + u1 x u2.
struct Quaternion {
  Rational scalar;
  Vector3 vec;

  static Quaternion e() { return {1, {}}; }
  static Quaternion i() { return {0, Vector3::e1()}; }
  static Quaternion j() { return {0, Vector3::e2()}; }
  static Quaternion k() { return {0, Vector3::j_axis()}; }
  static Quaternion pure(Vector3 v) { return {0, std::move(v)}; }

  bool is_pure() const { return scalar.is_zero(); }
  bool is_zero() const { return scalar.is_zero() && vec.is_zero(); }
  Rational norm2() const { return scalar * scalar + dot(vec, vec); }
  bool is_unit() const { return norm2() == Rational(1); }
  Quaternion conj() const { return {scalar, -vec}; }
  Quaternion inverse() const;

  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(const Rational& s);
  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator*(Quaternion a, const Rational& s) { return a *= s; }
  friend Quaternion operator*(const Rational& s, Quaternion a) { return a *= s; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  Quaternion operator-() const { return {-scalar, -vec}; }
  friend bool operator==(const Quaternion&, const Quaternion&) = default;

  /// DSL form over the units e, i, j, k, e.g. "e + 2*i - k/3".
  std::string to_string() const;
};

inline Quaternion qmul(const Quaternion& a, const Quaternion& b) { return a * b; }

/// J(v) = j x v = j * v for v in the tangent plane at the unit pure j.
/// Throws DomainError unless j is a pure unit and v is pure and orthogonal to j.
Quaternion apply_j(const Quaternion& j, const Quaternion& v);

/// Symplectic form of the tangent plane at j:
///   omega(v, w) = <j v, w> = <j, v w>.
/// Both expressions are evaluated; a mismatch throws (it would be a bug).
Rational omega_on_tangent(const Quaternion& j, const Vector3& v, const Vector3& w);

/// g a g^-1 for unit g and pure unit a.
Quaternion conjugate_pure(const Quaternion& g, const Quaternion& a);

/// Throws DomainError unless q is a pure unit quaternion.
void require_pure_unit(const Quaternion& q, const char* what);

}  // namespace sympcliff
