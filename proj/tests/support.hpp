#pragma once

#include "sympcliff/poisson.hpp"
#include "sympcliff/quaternion.hpp"
#include "sympcliff/rng.hpp"
#include "sympcliff/scalars.hpp"

namespace test {

using sympcliff::Rational;

inline Rational R(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }

inline sympcliff::Quaternion random_quaternion(sympcliff::Xoshiro256& rng) {
  using sympcliff::random_rational;
  return {random_rational(rng), {random_rational(rng), random_rational(rng), random_rational(rng)}};
}

inline sympcliff::QuadPoly random_quad(sympcliff::Xoshiro256& rng) {
  using sympcliff::random_rational;
  return {random_rational(rng), random_rational(rng), random_rational(rng)};
}

}  // namespace test
