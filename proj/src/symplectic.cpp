#include "sympcliff/symplectic.hpp"

#include "sympcliff/error.hpp"

namespace sympcliff {

SymplecticForm2::SymplecticForm2(Endo2 matrix) : matrix_(std::move(matrix)) {
  if (!(matrix_ + matrix_.transpose()).is_zero()) throw DomainError("symplectic form must be skew-symmetric");
  if (matrix_.det().is_zero()) throw DomainError("symplectic form is degenerate");
}

Rational SymplecticForm2::operator()(const Coords2& v, const Coords2& w) const {
  return bilinear(matrix_, v, w);
}

Coords2 apply_row(const Endo2& x, const Coords2& v) {
  return {v[0] * x(0, 0) + v[1] * x(1, 0), v[0] * x(0, 1) + v[1] * x(1, 1)};
}

Rational bilinear(const Endo2& b, const Coords2& v, const Coords2& w) {
  Rational out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out += v[i] * b(i, j) * w[j];
  return out;
}

bool is_positive_definite(const Endo2& g) {
  return g == g.transpose() && g(0, 0).sign() > 0 && g.det().sign() > 0;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.num().get_mpz_t()) || !mpz_perfect_square_p(r.den().get_mpz_t()))
    return std::nullopt;
  return Rational(sqrt(r.num()), sqrt(r.den()));
}

ComplexStructure j_from_form(const SymplecticForm2& omega, const Endo2& g) {
  if (!is_positive_definite(g)) throw DomainError("scalar product must be symmetric positive definite");
  Endo2 s = omega.matrix() * g.inverse();
  auto kappa = rational_sqrt(s.det());
  if (!kappa)
    throw DomainError("normalising omega needs sqrt(" + s.det().to_string() +
                      "), which is irrational; rescale the scalar product");
  return {s * kappa->inverse(), *kappa};
}

Endo2 scalar_from_form(const SymplecticForm2& omega, const Endo2& J) {
  if (J * J != -Endo2::id()) throw DomainError("J does not satisfy J^2 = -id");
  if (J * omega.matrix() * J.transpose() != omega.matrix()) throw DomainError("J does not preserve omega");
  Endo2 g = -(J * omega.matrix());
  if (!is_positive_definite(g)) throw DomainError("-omega(J., .) is not positive definite for this J");
  return g;
}

std::array<Coords2, 2> rational_orthonormal_basis(const Endo2& g) {
  if (!is_positive_definite(g)) throw DomainError("scalar product must be symmetric positive definite");
  auto normalise = [&](const Coords2& v) {
    auto n = rational_sqrt(bilinear(g, v, v));
    if (!n) throw DomainError("normalisation requires an irrational square root");
    Rational inv = n->inverse();
    return Coords2{v[0] * inv, v[1] * inv};
  };
  Coords2 u = normalise({1, 0});
  Coords2 w{0, 1};
  Rational proj = bilinear(g, w, u);
  w = {w[0] - proj * u[0], w[1] - proj * u[1]};
  return {u, normalise(w)};
}

PhasePlane make_phase_plane(const Quaternion& j, const Vector3& e_q) {
  require_pure_unit(j, "j");
  if (dot(e_q, e_q) != Rational(1)) throw DomainError("e_q must be a unit vector");
  if (!dot(j.vec, e_q).is_zero()) throw DomainError("e_q must be orthogonal to j");
  Vector3 e_p = cross(j.vec, e_q);
  if (omega_on_tangent(j, e_q, e_p) != Rational(1)) throw Error("make_phase_plane: basis is not symplectic");
  return {j, e_q, e_p};
}

Rational SymplecticSpace2n::omega(int a, int b) const {
  if (a < 0 || b < 0 || a >= 2 * n || b >= 2 * n) throw DomainError("basis index out of range");
  if (a / 2 != b / 2) return 0;
  const PhasePlane& pl = planes[a / 2].plane;
  const Vector3& u = a % 2 == 0 ? pl.e_q : pl.e_p;
  const Vector3& v = b % 2 == 0 ? pl.e_q : pl.e_p;
  return omega_on_tangent(pl.j, u, v);
}

std::vector<std::vector<Rational>> SymplecticSpace2n::form_matrix() const {
  std::vector<std::vector<Rational>> out(2 * n, std::vector<Rational>(2 * n));
  for (int a = 0; a < 2 * n; ++a)
    for (int b = 0; b < 2 * n; ++b) out[a][b] = omega(a, b);
  return out;
}

SymplecticForm2 SymplecticSpace2n::plane_form(int s) const {
  return SymplecticForm2(Endo2::from(omega(2 * s, 2 * s), omega(2 * s, 2 * s + 1), omega(2 * s + 1, 2 * s),
                                     omega(2 * s + 1, 2 * s + 1)));
}

SymplecticSpace2n particle_phase_space(int m) {
  if (m < 1) throw DomainError("particle count must be at least 1");
  SymplecticSpace2n space;
  space.n = 3 * m;
  PhasePlane canonical = make_phase_plane(Quaternion::k(), Vector3::e1());
  for (int s = 1; s <= space.n; ++s) {
    std::string idx = std::to_string(s);
    space.planes.push_back({canonical, "q" + idx, "p" + idx, (s - 1) / 3 + 1, "xyz"[(s - 1) % 3]});
  }
  return space;
}

}  // namespace sympcliff
