#include "doctest.h"
#include "support.hpp"
#include "sympcliff/error.hpp"
#include "sympcliff/poisson.hpp"

using namespace sympcliff;
using test::R;

namespace {
// Oracle: {f, g}(q, p) via central differences of the polynomial values.
// Exact for quadratics since the step is exact over the rationals.
Rational bracket_at(const QuadPoly& f, const QuadPoly& g, const Rational& q, const Rational& p) {
  auto dq = [&](const QuadPoly& h) { return (h.eval(q + 1, p) - h.eval(q - 1, p)) / 2; };
  auto dp = [&](const QuadPoly& h) { return (h.eval(q, p + 1) - h.eval(q, p - 1)) / 2; };
  return dq(f) * dp(g) - dp(f) * dq(g);
}
}  // namespace

TEST_CASE("ham on the generators") {
  CHECK(ham(QuadPoly::q2_half()).matrix == Endo2::from(0, 0, -1, 0));
  CHECK(ham(QuadPoly::p2_half()).matrix == Endo2::from(0, 1, 0, 0));
  CHECK(ham(QuadPoly::qp()).matrix == Endo2::from(1, 0, 0, -1));
  CHECK(ham(QuadPoly::q2_half() + QuadPoly::p2_half()).matrix == Endo2::J());
}

TEST_CASE("ham_inverse") {
  CHECK(ham_inverse(Endo2::from(0, 0, -1, 0)) == QuadPoly::q2_half());
  CHECK(ham_inverse(Endo2::from(1, 0, 0, -1)) == QuadPoly::qp());
  CHECK(ham_inverse(Endo2::zero()).is_zero());
  CHECK_THROWS_AS(ham_inverse(Endo2::id()), DomainError);
}

TEST_CASE("pbracket examples") {
  CHECK(pbracket(QuadPoly::q2_half(), QuadPoly::p2_half()) == QuadPoly::qp());
  CHECK(pbracket(QuadPoly::qp(), QuadPoly::p2_half()) == QuadPoly{0, 1, 0});
  CHECK(pbracket(QuadPoly::qp(), QuadPoly::q2_half()) == QuadPoly{-1, 0, 0});
}

TEST_CASE("pbracket agrees with the difference-quotient oracle") {
  Xoshiro256 rng(41);
  for (int t = 0; t < 300; ++t) {
    QuadPoly f = test::random_quad(rng), g = test::random_quad(rng);
    QuadPoly h = pbracket(f, g);
    for (int k = 0; k < 3; ++k) {
      Rational q = random_rational(rng), p = random_rational(rng);
      REQUIRE(h.eval(q, p) == bracket_at(f, g, q, p));
    }
    REQUIRE(pbracket(Poly2::from(f), Poly2::from(g)) == Poly2::from(h));
  }
}

TEST_CASE("ham is a Lie algebra isomorphism") {
  Xoshiro256 rng(43);
  for (int t = 0; t < 300; ++t) {
    QuadPoly f = test::random_quad(rng), g = test::random_quad(rng);
    REQUIRE(ham(f).matrix.trace() == 0);
    REQUIRE(ham_inverse(ham(f)) == f);
    REQUIRE(ham(pbracket(f, g)).matrix == commutator(ham(f).matrix, ham(g).matrix));
  }
}

TEST_CASE("hamfield_cross") {
  Coords2 h{R(2), R(-3)};
  CHECK(hamfield_cross(Poly2::coord_q(), Poly2::coord_p(), h) == 1);
  Poly2 f = Poly2::from(QuadPoly{1, 2, 3});
  CHECK(hamfield_cross(f, f, h) == 0);
  CHECK(hamfield_cross(Poly2::coord_q(), Poly2::coord_q(), h) == 0);
  Xoshiro256 rng(45);
  for (int t = 0; t < 200; ++t) {
    QuadPoly a = test::random_quad(rng), b = test::random_quad(rng);
    Rational q = random_rational(rng), p = random_rational(rng);
    REQUIRE(hamfield_cross(Poly2::from(a), Poly2::from(b), {q, p}) == bracket_at(a, b, q, p));
  }
}

TEST_CASE("hamiltonian vector field of the coordinates") {
  Coords2 h{1, 1};
  CHECK(hamiltonian_field_at(Poly2::coord_q(), h) == Vector3{0, -1, 0});
  CHECK(hamiltonian_field_at(Poly2::coord_p(), h) == Vector3{1, 0, 0});
}

TEST_CASE("Poly2 degree limit") {
  CHECK_THROWS_AS(Poly2::from(QuadPoly::qp()) * Poly2::coord_q(), DomainError);
  CHECK(Poly2::coord_q() * Poly2::coord_p() == Poly2::from(QuadPoly::qp()));
  CHECK_THROWS_AS(Poly2::coord_q().to_quad(), DomainError);
}

TEST_CASE("pclifford_mul") {
  PoissonCliffordElement h{0, QuadPoly::q2_half() + QuadPoly::p2_half()};
  CHECK(pclifford_mul(h, h) == PoissonCliffordElement{-1, {}});
  PoissonCliffordElement x{R(2, 3), QuadPoly{1, -1, 2}};
  CHECK(pclifford_mul(PoissonCliffordElement{1, {}}, x) == x);
  Xoshiro256 rng(47);
  for (int t = 0; t < 200; ++t) {
    PoissonCliffordElement a{random_rational(rng), test::random_quad(rng)};
    PoissonCliffordElement b{random_rational(rng), test::random_quad(rng)};
    PoissonCliffordElement c{random_rational(rng), test::random_quad(rng)};
    REQUIRE(pclifford_mul(pclifford_mul(a, b), c) == pclifford_mul(a, pclifford_mul(b, c)));
    REQUIRE(ham_extended_inverse(ham_extended(a)) == a);
  }
}
