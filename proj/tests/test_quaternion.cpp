#include "doctest.h"
#include "support.hpp"
#include "sympcliff/error.hpp"
#include "sympcliff/quaternion.hpp"

using namespace sympcliff;
using test::R;

namespace {
// Oracle: Hamilton product written out componentwise on (w, x, y, z).
Quaternion hamilton(const Quaternion& a, const Quaternion& b) {
  const Rational &a1 = a.scalar, &b1 = a.vec.x, &c1 = a.vec.y, &d1 = a.vec.z;
  const Rational &a2 = b.scalar, &b2 = b.vec.x, &c2 = b.vec.y, &d2 = b.vec.z;
  return {a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
          {a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2, a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
           a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2}};
}
}  // namespace

TEST_CASE("qmul matches the componentwise Hamilton product") {
  Xoshiro256 rng(3);
  for (int t = 0; t < 1000; ++t) {
    Quaternion a = test::random_quaternion(rng), b = test::random_quaternion(rng);
    REQUIRE(qmul(a, b) == hamilton(a, b));
  }
}

TEST_CASE("qmul examples") {
  CHECK(Quaternion::i() * Quaternion::j() == Quaternion::k());
  Quaternion j = Quaternion::pure({R(2, 3), R(1, 3), R(2, 3)});
  REQUIRE(j.is_unit());
  CHECK(j * j == -Quaternion::e());
  Quaternion x{1, {2, 0, R(-1, 3)}};
  CHECK(Quaternion::e() * x == x);
  CHECK(x.to_string() == "e + 2*i - k/3");
}

TEST_CASE("quaternion axioms on random cases") {
  Xoshiro256 rng(5);
  for (int t = 0; t < 1000; ++t) {
    Quaternion a = test::random_quaternion(rng), b = test::random_quaternion(rng), c = test::random_quaternion(rng);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE((a * b).norm2() == a.norm2() * b.norm2());
    REQUIRE(a * Quaternion::e() == a);
    if (!a.is_zero()) REQUIRE(a * a.inverse() == Quaternion::e());
  }
  CHECK_THROWS_AS(Quaternion{}.inverse(), DivisionByZero);
}

TEST_CASE("cross and dot") {
  CHECK(cross(Vector3::e1(), Vector3::e2()) == Vector3::j_axis());
  CHECK(dot(Vector3::j_axis(), Vector3::j_axis()) == 1);
  Vector3 u{1, -2, 5};
  CHECK(cross(u, u).is_zero());
}

TEST_CASE("apply_j") {
  Quaternion k = Quaternion::k();
  CHECK(apply_j(k, Quaternion::i()) == Quaternion::j());
  Quaternion v = Quaternion::pure({3, -4, 0});
  CHECK(apply_j(k, apply_j(k, v)) == -v);
  CHECK(apply_j(Quaternion::j(), Quaternion::i()) == Quaternion::pure({0, 0, -1}));
  CHECK_THROWS_AS(apply_j(Quaternion::pure({1, 1, 0}), Quaternion::k()), DomainError);
  CHECK_THROWS_AS(apply_j(k, Quaternion::k()), DomainError);
  CHECK_THROWS_AS(apply_j(k, Quaternion{1, {1, 0, 0}}), DomainError);
}

TEST_CASE("omega_on_tangent") {
  Quaternion k = Quaternion::k();
  CHECK(omega_on_tangent(k, Vector3::e1(), Vector3::e2()) == 1);
  Vector3 v{2, 1, 0}, w{1, -1, 0};
  CHECK(omega_on_tangent(k, v, v) == 0);
  CHECK(omega_on_tangent(k, v, w) == -3);
}

TEST_CASE("conjugate_pure") {
  Quaternion a = Quaternion::i();
  CHECK(conjugate_pure(Quaternion::e(), a) == a);
  CHECK(conjugate_pure(Quaternion::k(), Quaternion::i()) == -Quaternion::i());
  CHECK(conjugate_pure(Quaternion::i(), Quaternion::j()) == -Quaternion::j());
  CHECK_THROWS_AS(conjugate_pure(Quaternion{2, {}}, a), DomainError);
}

TEST_CASE("Clifford property and grading on tangent planes") {
  Xoshiro256 rng(9);
  for (int t = 0; t < 500; ++t) {
    Rational u = random_rational(rng), s = random_rational(rng), d = u * u + s * s + 1;
    Quaternion j = Quaternion::pure({2 * u / d, 2 * s / d, (u * u + s * s - 1) / d});
    REQUIRE(j.is_unit());
    Vector3 v = cross(j.vec, {random_rational(rng), random_rational(rng), random_rational(rng)});
    Quaternion pv = Quaternion::pure(v);
    REQUIRE(pv * pv == Quaternion::e() * (-dot(v, v)));
    Quaternion w = Quaternion::pure(cross(j.vec, v));
    Quaternion vw = pv * w;
    REQUIRE(cross(vw.vec, j.vec).is_zero());
  }
}
