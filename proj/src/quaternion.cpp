#include "sympcliff/quaternion.hpp"

#include "sympcliff/format.hpp"

namespace sympcliff {

Vector3& Vector3::operator+=(const Vector3& o) {
  x += o.x;
  y += o.y;
  z += o.z;
  return *this;
}
Vector3& Vector3::operator-=(const Vector3& o) {
  x -= o.x;
  y -= o.y;
  z -= o.z;
  return *this;
}
Vector3& Vector3::operator*=(const Rational& s) {
  x *= s;
  y *= s;
  z *= s;
  return *this;
}

std::string Vector3::to_string() const {
  return "(" + x.to_string() + ", " + y.to_string() + ", " + z.to_string() + ")";
}

Rational dot(const Vector3& u, const Vector3& v) { return u.x * v.x + u.y * v.y + u.z * v.z; }

Vector3 cross(const Vector3& u, const Vector3& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

Quaternion Quaternion::inverse() const {
  Rational n = norm2();
  if (n.is_zero()) throw DivisionByZero();
  return conj() * n.inverse();
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  scalar += o.scalar;
  vec += o.vec;
  return *this;
}
Quaternion& Quaternion::operator-=(const Quaternion& o) {
  scalar -= o.scalar;
  vec -= o.vec;
  return *this;
}
Quaternion& Quaternion::operator*=(const Rational& s) {
  scalar *= s;
  vec *= s;
  return *this;
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.scalar * b.scalar - dot(a.vec, b.vec),
          a.scalar * b.vec + b.scalar * a.vec + cross(a.vec, b.vec)};
}

std::string Quaternion::to_string() const {
  return format_combination({{scalar, "e"}, {vec.x, "i"}, {vec.y, "j"}, {vec.z, "k"}});
}

void require_pure_unit(const Quaternion& q, const char* what) {
  if (!q.is_pure()) throw DomainError(std::string(what) + " must be a pure quaternion");
  if (!q.is_unit()) throw DomainError(std::string(what) + " must have unit norm");
}

Quaternion apply_j(const Quaternion& j, const Quaternion& v) {
  require_pure_unit(j, "j");
  if (!v.is_pure()) throw DomainError("v must be a pure quaternion");
  if (!dot(j.vec, v.vec).is_zero()) throw DomainError("v is not in the tangent plane of j");
  return j * v;
}

Rational omega_on_tangent(const Quaternion& j, const Vector3& v, const Vector3& w) {
  require_pure_unit(j, "j");
  if (!dot(j.vec, v).is_zero() || !dot(j.vec, w).is_zero())
    throw DomainError("arguments are not in the tangent plane of j");
  Quaternion jv = j * Quaternion::pure(v);
  Rational via_action = dot(jv.vec, w);
  Quaternion vw = Quaternion::pure(v) * Quaternion::pure(w);
  Rational via_product = dot(j.vec, vw.vec);
  if (via_action != via_product)
    throw Error("omega_on_tangent: <j v, w> = " + via_action.to_string() + " but <j, v w> = " +
                via_product.to_string());
  return via_action;
}

Quaternion conjugate_pure(const Quaternion& g, const Quaternion& a) {
  if (!g.is_unit()) throw DomainError("g must be a unit quaternion");
  require_pure_unit(a, "a");
  return g * a * g.conj();
}

}  // namespace sympcliff
