#include <map>

#include "doctest.h"
#include "support.hpp"
#include "sympcliff/error.hpp"
#include "sympcliff/process.hpp"

using namespace sympcliff;

namespace {
const char* kLabels[] = {"e", "[P0P1]", "[P0P2]", "[P1P2]"};
// Multiplication table of the processes, row * column, transcribed from the reference table.
const char* kTable[4][4] = {
    {"e", "[P0P1]", "[P0P2]", "[P1P2]"},
    {"[P0P1]", "-e", "-[P1P2]", "[P0P2]"},
    {"[P0P2]", "[P1P2]", "-e", "-[P0P1]"},
    {"[P1P2]", "-[P0P2]", "[P0P1]", "-e"},
};
}  // namespace

TEST_CASE("stored table reproduces the transcribed process table") {
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      CAPTURE(kLabels[r]);
      CAPTURE(kLabels[c]);
      CHECK(compose({1, kAllProcessKinds[r]}, {1, kAllProcessKinds[c]}).to_string() == kTable[r][c]);
    }
}

TEST_CASE("compose examples") {
  auto p01 = SignedProcess::simplex(Pole(0), Pole(1));
  auto p12 = SignedProcess::simplex(Pole(1), Pole(2));
  auto p02 = SignedProcess::simplex(Pole(0), Pole(2));
  CHECK(compose(p01, p01) == -SignedProcess::unit());
  CHECK(compose(p01, p12) == p02);
  CHECK(compose(SignedProcess::unit(), p02) == p02);
  CHECK(SignedProcess::simplex(Pole(2), Pole(1)) == -p12);
  CHECK(SignedProcess::simplex(Pole(1), Pole(1)) == SignedProcess::unit());
  CHECK_THROWS_AS(Pole(3), DomainError);
  CHECK_THROWS_AS(Pole(-1), DomainError);
}

TEST_CASE("pole rule agrees with the table") {
  for (const auto& a : all_signed_processes())
    for (const auto& b : all_signed_processes()) CHECK(compose(a, b) == compose_by_pole_rule(a, b));
}

TEST_CASE("compose is associative on all triples") {
  auto all = all_signed_processes();
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all) REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
}

TEST_CASE("to_quaternion_unit") {
  CHECK(to_quaternion_unit({1, ProcessKind::P01}) == Quaternion::i());
  CHECK(to_quaternion_unit({-1, ProcessKind::P12}) == -Quaternion::k());
  CHECK(to_quaternion_unit(SignedProcess::unit()) == Quaternion::e());
}

TEST_CASE("literal notation change reverses products") {
  // [P0P1][P0P2] = -[P1P2] while i j = k.
  CHECK(compose({1, ProcessKind::P01}, {1, ProcessKind::P02}) == SignedProcess{-1, ProcessKind::P12});
  CHECK(Quaternion::i() * Quaternion::j() == Quaternion::k());
  for (const auto& a : all_signed_processes())
    for (const auto& b : all_signed_processes()) {
      Quaternion ab = to_quaternion_unit(compose(a, b));
      CHECK(ab == to_quaternion_unit(b) * to_quaternion_unit(a));
      CHECK(ab.conj() == to_quaternion_unit(a).conj() * to_quaternion_unit(b).conj());
    }
}
