#include "sympcliff/poisson.hpp"

#include "sympcliff/error.hpp"
#include "sympcliff/format.hpp"

namespace sympcliff {
namespace {
const Rational kHalf(mpz_class(1), mpz_class(2));
}

Rational QuadPoly::eval(const Rational& q, const Rational& p) const {
  return cqq * q * q + cpp * p * p + cqp * q * p;
}

QuadPoly& QuadPoly::operator+=(const QuadPoly& o) {
  cqq += o.cqq;
  cpp += o.cpp;
  cqp += o.cqp;
  return *this;
}
QuadPoly& QuadPoly::operator-=(const QuadPoly& o) {
  cqq -= o.cqq;
  cpp -= o.cpp;
  cqp -= o.cqp;
  return *this;
}
QuadPoly& QuadPoly::operator*=(const Rational& s) {
  cqq *= s;
  cpp *= s;
  cqp *= s;
  return *this;
}

std::string QuadPoly::to_string() const { return Poly2::from(*this).to_string(); }

int Poly2::degree() const {
  if (!cqq.is_zero() || !cpp.is_zero() || !cqp.is_zero()) return 2;
  if (!cq.is_zero() || !cp.is_zero()) return 1;
  return c0.is_zero() ? -1 : 0;
}

QuadPoly Poly2::to_quad() const {
  if (!is_homogeneous_quadratic())
    throw DomainError("polynomial " + to_string() + " is not homogeneous quadratic");
  return {cqq, cpp, cqp};
}

Rational Poly2::eval(const Rational& q, const Rational& p) const {
  return c0 + cq * q + cp * p + cqq * q * q + cpp * p * p + cqp * q * p;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  c0 += o.c0;
  cq += o.cq;
  cp += o.cp;
  cqq += o.cqq;
  cpp += o.cpp;
  cqp += o.cqp;
  return *this;
}
Poly2& Poly2::operator-=(const Poly2& o) { return *this += -o; }
Poly2& Poly2::operator*=(const Rational& s) {
  for (Rational* c : {&c0, &cq, &cp, &cqq, &cpp, &cqp}) *c *= s;
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  int da = a.degree(), db = b.degree();
  if (da < 0 || db < 0) return {};
  if (da + db > 2) throw DomainError("product has degree " + std::to_string(da + db) + " > 2");
  Poly2 r;
  r.c0 = a.c0 * b.c0;
  r.cq = a.c0 * b.cq + a.cq * b.c0;
  r.cp = a.c0 * b.cp + a.cp * b.c0;
  r.cqq = a.c0 * b.cqq + a.cqq * b.c0 + a.cq * b.cq;
  r.cpp = a.c0 * b.cpp + a.cpp * b.c0 + a.cp * b.cp;
  r.cqp = a.c0 * b.cqp + a.cqp * b.c0 + a.cq * b.cp + a.cp * b.cq;
  return r;
}

std::string Poly2::to_string() const {
  return format_combination({{cqq, "q^2"}, {cqp, "q*p"}, {cpp, "p^2"}, {cq, "q"}, {cp, "p"}, {c0, ""}});
}

LinearHamField ham(const QuadPoly& f) {
  return {Endo2::from(f.cqp, 2 * f.cpp, -2 * f.cqq, -f.cqp)};
}

QuadPoly ham_inverse(const Endo2& x) {
  if (!x.trace().is_zero()) throw DomainError("ham_inverse: matrix " + x.to_string() + " is not traceless");
  return {-x(1, 0) * kHalf, x(0, 1) * kHalf, x(0, 0)};
}

QuadPoly pbracket(const QuadPoly& f, const QuadPoly& g) {
  return {2 * (f.cqq * g.cqp - f.cqp * g.cqq), 2 * (f.cqp * g.cpp - f.cpp * g.cqp),
          4 * (f.cqq * g.cpp - f.cpp * g.cqq)};
}

Poly2 pbracket(const Poly2& f, const Poly2& g) {
  return f.d_dq() * g.d_dp() - f.d_dp() * g.d_dq();
}

Vector3 hamiltonian_field_at(const Poly2& f, const Coords2& h) {
  return {f.d_dp().eval(h[0], h[1]), -f.d_dq().eval(h[0], h[1]), 0};
}

Rational hamfield_cross(const Poly2& f, const Poly2& g, const Coords2& h) {
  Vector3 c = cross(hamiltonian_field_at(f, h), hamiltonian_field_at(g, h));
  if (!c.x.is_zero() || !c.y.is_zero()) throw Error("hamfield_cross: cross product left the j axis");
  return c.z;
}

std::string PoissonCliffordElement::to_string() const {
  return format_combination({{quad.cqq, "q^2"}, {quad.cqp, "q*p"}, {quad.cpp, "p^2"}, {scalar, "e"}});
}

HspElement ham_extended(const PoissonCliffordElement& x) { return {x.scalar, ham(x.quad).matrix}; }

PoissonCliffordElement ham_extended_inverse(const HspElement& x) { return {x.scalar, ham_inverse(x.vec)}; }

PoissonCliffordElement pclifford_mul(const PoissonCliffordElement& x, const PoissonCliffordElement& y) {
  return ham_extended_inverse(hsp_product(ham_extended(x), ham_extended(y)));
}

}  // namespace sympcliff
