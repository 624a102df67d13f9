#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sympcliff/endf_sp.hpp"
#include "sympcliff/quaternion.hpp"

namespace sympcliff {

// Conventions of this module: a bilinear form b is stored as the matrix
// b_ij = b(e_i, e_j); an endomorphism X is stored by the images of the basis
// vectors, row i holding the coordinates of X(e_i). With the canonical form
// [[0, 1], [-1, 0]] and the identity scalar product the almost complex
// structure is J = [[0, 1], [-1, 0]], i.e. J(e1) = e2.

using Coords2 = std::array<Rational, 2>;

/// Constant skew-symmetric non-degenerate form on a plane.
class SymplecticForm2 {
 public:
  /// Throws DomainError if `matrix` is not skew or is degenerate.
  explicit SymplecticForm2(Endo2 matrix);
  static SymplecticForm2 canonical() { return SymplecticForm2(Endo2::J()); }

  const Endo2& matrix() const { return matrix_; }
  Rational operator()(const Coords2& v, const Coords2& w) const;

 private:
  Endo2 matrix_;
};

/// Almost complex structure J representing omega, and the scale kappa with
/// S = kappa * J in omega(v, w) = <S v, w>.
struct ComplexStructure {
  Endo2 J;
  Rational kappa;
};

/// Solves omega(v, w) = <S v, w> for the skew-adjoint S and normalises it.
/// kappa = sqrt(det omega / det <,>) must be rational; otherwise DomainError.
ComplexStructure j_from_form(const SymplecticForm2& omega, const Endo2& scalar_product = Endo2::id());

/// The unique scalar product <v, w> = -omega(J v, w). Throws DomainError if
/// J^2 != -id, J does not preserve omega, or the result is not positive.
Endo2 scalar_from_form(const SymplecticForm2& omega, const Endo2& J);

/// Applies an endomorphism in this module's row convention.
Coords2 apply_row(const Endo2& x, const Coords2& v);
/// b(v, w) for a bilinear form matrix.
Rational bilinear(const Endo2& b, const Coords2& v, const Coords2& w);

bool is_positive_definite(const Endo2& symmetric);

/// Exact square root of a non-negative rational, if it is a rational square.
std::optional<Rational> rational_sqrt(const Rational& r);

/// Gram-Schmidt over Q on the standard basis; throws DomainError when a norm
/// is irrational. Returns the two orthonormal vectors.
std::array<Coords2, 2> rational_orthonormal_basis(const Endo2& scalar_product);

/// Phase plane in the tangent plane at j: e_p = j x e_q, omega(e_q, e_p) = 1.
struct PhasePlane {
  Quaternion j;
  Vector3 e_q;
  Vector3 e_p;
};

/// Throws DomainError unless j is a pure unit and e_q a unit vector orthogonal to j.
PhasePlane make_phase_plane(const Quaternion& j, const Vector3& e_q);

/// Direct sum of n canonical phase planes, basis ordered (q1, p1, q2, p2, ...).
struct SymplecticSpace2n {
  struct Plane {
    PhasePlane plane;
    std::string q_label;
    std::string p_label;
    int particle = 0;  // 1-based; 0 when not built from particles
    char axis = ' ';   // 'x', 'y', 'z' or ' '
  };

  int n = 0;
  std::vector<Plane> planes;

  /// omega(b_a, b_b) for basis indices a, b in [0, 2n).
  Rational omega(int a, int b) const;
  /// Full 2n x 2n matrix of omega.
  std::vector<std::vector<Rational>> form_matrix() const;
  /// Restriction of omega to plane s (0-based).
  SymplecticForm2 plane_form(int s) const;
};

/// Phase space of m particles in R^3: n = 3m planes, plane s pairs q_s with p_s.
SymplecticSpace2n particle_phase_space(int m);

}  // namespace sympcliff
