#include "doctest.h"
#include "support.hpp"
#include "sympcliff/error.hpp"
#include "sympcliff/symplectic.hpp"

using namespace sympcliff;
using test::R;

TEST_CASE("form validation") {
  CHECK_THROWS_AS(SymplecticForm2(Endo2::id()), DomainError);
  CHECK_THROWS_AS(SymplecticForm2(Endo2::zero()), DomainError);
  CHECK_NOTHROW(SymplecticForm2(Endo2::from(0, R(5, 3), R(-5, 3), 0)));
}

TEST_CASE("j_from_form") {
  auto cs = j_from_form(SymplecticForm2::canonical());
  CHECK(cs.J == Endo2::from(0, 1, -1, 0));
  CHECK(cs.kappa == 1);
  CHECK(cs.J * cs.J == -Endo2::id());
  auto cs3 = j_from_form(SymplecticForm2(Endo2::from(0, 3, -3, 0)));
  CHECK(cs3.kappa == 3);
  CHECK(cs3.J == Endo2::J());
  // det omega = 2 has no rational square root.
  CHECK_THROWS_AS(j_from_form(SymplecticForm2::canonical(),
                              Endo2::from(2, 0, 0, 1)),
                  DomainError);
}

TEST_CASE("j_from_form solves omega(v, w) = kappa <J v, w> entrywise") {
  Xoshiro256 rng(21);
  int tested = 0;
  for (int t = 0; t < 400; ++t) {
    Rational w = random_nonzero_rational(rng);
    Rational s = random_nonzero_rational(rng);
    // Scalar product diag(s^2, 1) keeps kappa rational: kappa = |w| / |s|.
    Endo2 g = Endo2::from(s * s, 0, 0, 1);
    SymplecticForm2 om(Endo2::from(0, w, -w, 0));
    auto cs = j_from_form(om, g);
    REQUIRE(cs.J * cs.J == -Endo2::id());
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        Coords2 va{a == 0 ? 1 : 0, a == 1 ? 1 : 0}, vb{b == 0 ? 1 : 0, b == 1 ? 1 : 0};
        REQUIRE(om(va, vb) == cs.kappa * bilinear(g, apply_row(cs.J, va), vb));
      }
    ++tested;
  }
  CHECK(tested == 400);
}

TEST_CASE("scalar_from_form") {
  CHECK(scalar_from_form(SymplecticForm2::canonical(), Endo2::J()) == Endo2::id());
  auto cs = j_from_form(SymplecticForm2::canonical());
  CHECK(scalar_from_form(SymplecticForm2::canonical(), cs.J) == Endo2::id());
  CHECK(scalar_from_form(SymplecticForm2(Endo2::from(0, 2, -2, 0)), Endo2::J()) == Endo2::from(2, 0, 0, 2));
  CHECK_THROWS_AS(scalar_from_form(SymplecticForm2::canonical(), Endo2::A()), DomainError);
  // -J gives a negative definite candidate.
  CHECK_THROWS_AS(scalar_from_form(SymplecticForm2::canonical(), -Endo2::J()), DomainError);
}

TEST_CASE("rational_sqrt") {
  CHECK(rational_sqrt(R(9, 4)) == R(3, 2));
  CHECK_FALSE(rational_sqrt(R(2)).has_value());
  CHECK_FALSE(rational_sqrt(R(-1)).has_value());
}

TEST_CASE("make_phase_plane") {
  auto a = make_phase_plane(Quaternion::k(), {1, 0, 0});
  CHECK(a.e_p == Vector3{0, 1, 0});
  auto b = make_phase_plane(Quaternion::i(), {0, 1, 0});
  CHECK(b.e_p == Vector3{0, 0, 1});
  auto c = make_phase_plane(Quaternion::k(), {0, 1, 0});
  CHECK(c.e_p == Vector3{-1, 0, 0});
  CHECK(omega_on_tangent(c.j, c.e_q, c.e_p) == 1);
  CHECK_THROWS_AS(make_phase_plane(Quaternion::k(), {0, 0, 1}), DomainError);
  CHECK_THROWS_AS(make_phase_plane(Quaternion::k(), {2, 0, 0}), DomainError);
}

TEST_CASE("particle_phase_space") {
  auto one = particle_phase_space(1);
  CHECK(one.n == 3);
  REQUIRE(one.planes.size() == 3);
  for (int s = 0; s < 3; ++s) {
    CHECK(one.planes[s].q_label == "q" + std::to_string(s + 1));
    CHECK(one.planes[s].p_label == "p" + std::to_string(s + 1));
    CHECK(one.plane_form(s).matrix() == Endo2::J());
  }
  CHECK(particle_phase_space(2).n == 6);
  CHECK_THROWS_AS(particle_phase_space(0), DomainError);
}

TEST_CASE("direct sum form is block diagonal") {
  auto sp = particle_phase_space(2);
  auto m = sp.form_matrix();
  REQUIRE(m.size() == 12);
  for (int a = 0; a < 12; ++a)
    for (int b = 0; b < 12; ++b) {
      Rational expected = 0;
      if (a / 2 == b / 2 && a != b) expected = (a % 2 == 0) ? 1 : -1;
      REQUIRE(m[a][b] == expected);
    }
}
