#include "sympcliff/endf_sp.hpp"

#include "sympcliff/error.hpp"

namespace sympcliff {

Endo2 Endo2::inverse() const {
  Rational d = det();
  if (d.is_zero()) throw DivisionByZero();
  Rational s = d.inverse();
  return from(m[1][1] * s, -m[0][1] * s, -m[1][0] * s, m[0][0] * s);
}

bool Endo2::is_zero() const {
  for (const auto& row : m)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

Endo2& Endo2::operator+=(const Endo2& o) {
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m[r][c] += o.m[r][c];
  return *this;
}
Endo2& Endo2::operator-=(const Endo2& o) {
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m[r][c] -= o.m[r][c];
  return *this;
}
Endo2& Endo2::operator*=(const Rational& s) {
  for (auto& row : m)
    for (auto& v : row) v *= s;
  return *this;
}

Endo2 operator*(const Endo2& a, const Endo2& b) {
  Endo2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
  return r;
}

std::string Endo2::to_string() const {
  return "[[" + m[0][0].to_string() + ", " + m[0][1].to_string() + "], [" + m[1][0].to_string() +
         ", " + m[1][1].to_string() + "]]";
}

Endo2 basis_matrix(EndfBasis b) {
  switch (b) {
    case EndfBasis::Id: return Endo2::id();
    case EndfBasis::J: return Endo2::J();
    case EndfBasis::A: return Endo2::A();
    case EndfBasis::B: return Endo2::B();
  }
  return Endo2::zero();
}

std::string basis_name(EndfBasis b) {
  switch (b) {
    case EndfBasis::Id: return "id";
    case EndfBasis::J: return "J";
    case EndfBasis::A: return "A";
    case EndfBasis::B: return "B";
  }
  return "?";
}

SignedBasis endf_table(EndfBasis x, EndfBasis y) {
  using E = EndfBasis;
  static const SignedBasis table[4][4] = {
      {{1, E::Id}, {1, E::J}, {1, E::A}, {1, E::B}},
      {{1, E::J}, {-1, E::Id}, {-1, E::B}, {1, E::A}},
      {{1, E::A}, {1, E::B}, {1, E::Id}, {1, E::J}},
      {{1, E::B}, {-1, E::A}, {-1, E::J}, {1, E::Id}},
  };
  return table[static_cast<int>(x)][static_cast<int>(y)];
}

SignedBasis as_signed_basis(const Endo2& m) {
  for (EndfBasis b : kEndfBasis) {
    Endo2 bm = basis_matrix(b);
    if (m == bm) return {1, b};
    if (m == -bm) return {-1, b};
  }
  throw DomainError("matrix " + m.to_string() + " is not a signed basis element");
}

Rational trace_inner(const Endo2& x, const Endo2& y) {
  return (x * y.transpose()).trace() * Rational(mpz_class(1), mpz_class(2));
}

Endo2 SpDecomposition::sigma_matrix() const {
  return sigma_part.first * Endo2::A() + sigma_part.second * Endo2::B();
}

Endo2 SpDecomposition::reconstruct() const {
  return trace_part * Endo2::id() + j_part * Endo2::J() + sigma_matrix();
}

SpDecomposition decompose_endf(const Endo2& m) {
  return {trace_inner(m, Endo2::id()),
          trace_inner(m, Endo2::J()),
          {trace_inner(m, Endo2::A()), trace_inner(m, Endo2::B())}};
}

bool in_sp(const Endo2& m) { return m.trace().is_zero(); }

bool in_sigma(const Endo2& m) {
  SpDecomposition d = decompose_endf(m);
  return d.trace_part.is_zero() && d.j_part.is_zero();
}

Rational omega_sigma(const Endo2& x, const Endo2& y) {
  if (!in_sigma(x) || !in_sigma(y)) throw DomainError("omega_sigma: arguments must lie in Sigma");
  return trace_inner(commutator(x, y) * Rational(mpz_class(1), mpz_class(2)), Endo2::J());
}

namespace {

// Coordinates in the oriented orthonormal basis (A, B, J).
Vector3 sp_coords(const Endo2& x) {
  if (!in_sp(x)) throw DomainError("element " + x.to_string() + " is not traceless");
  SpDecomposition d = decompose_endf(x);
  return {d.sigma_part.first, d.sigma_part.second, d.j_part};
}

Endo2 from_sp_coords(const Vector3& v) { return v.x * Endo2::A() + v.y * Endo2::B() + v.z * Endo2::J(); }

}  // namespace

Endo2 sp_cross(const Endo2& x, const Endo2& y) { return from_sp_coords(cross(sp_coords(x), sp_coords(y))); }

HspElement hsp_product(const HspElement& x, const HspElement& y) {
  Vector3 u = sp_coords(x.vec);
  Vector3 w = sp_coords(y.vec);
  return {x.scalar * y.scalar - dot(u, w), from_sp_coords(x.scalar * w + y.scalar * u + cross(u, w))};
}

HspElement quaternion_to_hsp(const Quaternion& q) {
  return {q.scalar, q.vec.x * Endo2::J() + q.vec.y * Endo2::A() + q.vec.z * Endo2::B()};
}

Quaternion hsp_to_quaternion(const HspElement& x) {
  if (!in_sp(x.vec)) throw DomainError("vector part is not traceless");
  SpDecomposition d = decompose_endf(x.vec);
  return {x.scalar, {d.j_part, d.sigma_part.first, d.sigma_part.second}};
}

}  // namespace sympcliff
