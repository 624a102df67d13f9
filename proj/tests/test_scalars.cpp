#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "sympcliff/error.hpp"

using namespace sympcliff;
using test::R;

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(R(1, 2) * R(1, 3) == R(1, 6));
  CHECK(R(2, 4) + 0 == R(1, 2));
  CHECK(R(3, 7) / R(3, 7) == 1);
  CHECK(R(2, 4).num() == 1);
  CHECK(R(1, -2).den() == 2);
  CHECK(R(1, -2).num() == -1);
  CHECK(R(-6, 4).to_string() == "-3/2");
  CHECK(R(5).to_string() == "5");
}

TEST_CASE("rational division by zero is an explicit error") {
  CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), DivisionByZero);
  CHECK_THROWS_AS(R(1) / R(0), DivisionByZero);
  CHECK_THROWS_AS(R(0).inverse(), DivisionByZero);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3/4") == R(3, 4));
  CHECK(Rational::parse("-5") == R(-5));
  CHECK(Rational::parse("6/8") == R(3, 4));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
}

TEST_CASE("gaussian rationals") {
  auto i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  GaussianRational a(1, 1), b(1, -1);
  CHECK(a * b == GaussianRational(2));
  GaussianRational z(R(3, 2), R(5, 7));
  CHECK(z.conj().conj() == z);
  CHECK(z * z.inverse() == GaussianRational(1));
  CHECK_THROWS_AS(GaussianRational(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(z / GaussianRational(0), DivisionByZero);
  CHECK(i.to_string() == "i");
  CHECK((-i).to_string() == "-i");
}

TEST_CASE("field axioms on random rationals and gaussian rationals") {
  Xoshiro256 rng(7);
  for (int t = 0; t < 1000; ++t) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a + b == b + a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    GaussianRational x = random_gaussian(rng), y = random_gaussian(rng), z = random_gaussian(rng);
    REQUIRE((x * y) * z == x * (y * z));
    REQUIRE(x * (y + z) == x * y + x * z);
    REQUIRE(x * y == y * x);
  }
}

TEST_CASE("conversion to double rounds to nearest") {
  CHECK(to_complex_f64(GaussianRational(R(1, 2))) == ComplexF64(0.5, 0));
  CHECK(to_complex_f64(GaussianRational::i()) == ComplexF64(0, 1));
  CHECK(to_double(R(1, 3)) == 0.3333333333333333);
  // Oracle: IEEE division of two exactly representable integers is correctly rounded.
  Xoshiro256 rng(11);
  for (int t = 0; t < 2000; ++t) {
    std::int64_t n = rng.uniform(-(std::int64_t{1} << 52), std::int64_t{1} << 52);
    std::int64_t d = rng.uniform(1, std::int64_t{1} << 52);
    REQUIRE(to_double(Rational(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)))) ==
            static_cast<double>(n) / static_cast<double>(d));
  }
}

TEST_CASE("conversion overflow is an explicit error") {
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 400);
  CHECK_THROWS_AS(to_double(Rational(big, 1)), OverflowError);
  CHECK_THROWS_AS(to_double(Rational(-big, 1)), OverflowError);
  // Tiny values round to zero, not an error.
  CHECK(to_double(Rational(1, big)) == 0.0);
}

TEST_CASE("from_double is exact") {
  Rational r = from_double(0.1);
  CHECK(r.num() == mpz_class("3602879701896397"));
  CHECK(r.den() == mpz_class("36028797018963968"));
  CHECK(to_double(r) == 0.1);
}
