#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "support.hpp"
#include "sympcliff/dsl.hpp"
#include "sympcliff/error.hpp"

using namespace sympcliff;
using namespace sympcliff::dsl;
using test::R;

namespace {
std::string kinds(const std::vector<Token>& ts) {
  std::string out;
  for (const auto& t : ts) out += (out.empty() ? "" : " ") + token_kind_name(t.kind) + "(" + t.text + ")";
  return out;
}

std::string eval_text(std::string_view input, Mode mode) { return format_value(evaluate(input, mode)); }
}  // namespace

TEST_CASE("tokenize") {
  auto ts = tokenize("{q^2/2, p^2/2}");
  REQUIRE(ts.size() == 13);
  CHECK(ts[0].kind == TokenKind::LBrace);
  CHECK(ts[1] == Token{TokenKind::Ident, "q", 1});
  CHECK(ts[2].kind == TokenKind::Caret);
  CHECK(ts[3] == Token{TokenKind::Number, "2", 3});
  CHECK(ts[4] == Token{TokenKind::Op, "/", 4});
  CHECK(ts[6].kind == TokenKind::Comma);
  CHECK(ts[12].kind == TokenKind::RBrace);
  auto ij = tokenize("i*j");
  REQUIRE(ij.size() == 3);
  CHECK(ij[0].kind == TokenKind::Ident);
  CHECK(ij[1] == Token{TokenKind::Op, "*", 1});
  CHECK(ij[2].text == "j");
  auto t3 = tokenize("3/4 + q*p");
  REQUIRE(t3.size() == 7);
  CHECK(t3[0] == Token{TokenKind::Number, "3", 0});
  CHECK(t3[2] == Token{TokenKind::Number, "4", 2});
  CHECK(t3[3] == Token{TokenKind::Op, "+", 4});
  CHECK(t3[6] == Token{TokenKind::Ident, "p", 8});
  CHECK(kinds(tokenize("ham(q)")) == kinds(tokenize(" ham ( q ) ")));
}

TEST_CASE("tokenize rejects unknown bytes with their offset") {
  try {
    tokenize("q + $");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(tokenize("q\x01"), ParseError);
  CHECK_THROWS_AS(tokenize("q.5"), ParseError);
}

TEST_CASE("precedence golden file") {
  std::ifstream in(SYMPCLIFF_GOLDEN_DIR "/precedence.txt");
  REQUIRE(in.good());
  std::string line;
  int cases = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    std::string input = line.substr(0, tab), expected = line.substr(tab + 1);
    CAPTURE(input);
    CHECK(tree_string(*parse(input)) == expected);
    ++cases;
  }
  CHECK(cases >= 16);
}

TEST_CASE("parse errors") {
  try {
    parse("q^3");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("exponent must be 1 or 2") != std::string::npos);
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("(q"), ParseError);
  CHECK_THROWS_AS(parse("q p"), ParseError);
  CHECK_THROWS_AS(parse("{q}"), ParseError);
  CHECK_THROWS_AS(parse("foo(q)"), ParseError);
  CHECK_THROWS_AS(parse("q^p"), ParseError);
  try {
    parse("q +");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
    CHECK_FALSE(e.expected().empty());
  }
}

TEST_CASE("nesting limit") {
  std::string ok(200, '(');
  ok += "q" + std::string(200, ')');
  CHECK_NOTHROW(parse(ok));
  std::string deep(300, '(');
  deep += "q" + std::string(300, ')');
  CHECK_THROWS_AS(parse(deep), ParseError);
  CHECK_THROWS_AS(parse(std::string(100000, '-') + "q"), ParseError);
}

TEST_CASE("print is a parse roundtrip") {
  const char* inputs[] = {"q - (p - q)", "(q*p)/(2*q)", "-(q+p)^2", "{q, {p, q*p}}", "2*-q", "q/(p/2)",
                          "[A, B]*[J, A] - id", "cross(ham(q*p), ham(p^2))", "((q))", "-(-q)", "(q^2)^1",
                          "spectrum(q^2/2 + p^2/2, 4)"};
  for (const char* s : inputs) {
    CAPTURE(s);
    auto e = parse(s);
    std::string printed = print(*e);
    CHECK(*parse(printed) == *e);
    CHECK(print(*parse(printed)) == printed);
  }
  CHECK(print(*parse("q - (p - q)")) == "q - (p - q)");
  CHECK(print(*parse("((q))*p")) == "q*p");
  CHECK(print(*parse("(q+p)*2")) == "(q + p)*2");
}

TEST_CASE("evaluation examples") {
  CHECK(eval_text("{q^2/2, p^2/2}", Mode::Poly) == "q*p");
  CHECK(eval_text("{q*p, p^2/2}", Mode::Poly) == "p^2");
  CHECK(eval_text("{q*p, q^2/2}", Mode::Poly) == "-q^2");
  CHECK(eval_text("i*j*k", Mode::Quaternion) == "-e");
  CHECK(eval_text("[A,B]", Mode::Endf) == "2*J");
  CHECK(eval_text("A*J", Mode::Endf) == "B");
  CHECK(eval_text("J*J", Mode::Endf) == "-id");
  CHECK(eval_text("[i, j]", Mode::Quaternion) == "2*k");
  CHECK(eval_text("1/2 + i/3", Mode::Quaternion) == "e/2 + i/3");
  CHECK(eval_text("ham(q^2/2)", Mode::Poly) == "J/2 - B/2");
  CHECK(eval_text("quantize(q*p)", Mode::Poly) == "-i*q̂*p̂ - 1/2");
  CHECK(eval_text("{q, p}", Mode::Poly) == "1");
}

TEST_CASE("evaluated values have the documented types") {
  CHECK(std::holds_alternative<Quaternion>(evaluate("i", Mode::Quaternion)));
  CHECK(std::holds_alternative<Poly2>(evaluate("q", Mode::Poly)));
  CHECK(std::holds_alternative<Endo2>(evaluate("A", Mode::Endf)));
  CHECK(std::holds_alternative<Endo2>(evaluate("ham(q*p)", Mode::Poly)));
  CHECK(std::holds_alternative<WeylElement>(evaluate("quantize(q*p)", Mode::Poly)));
  auto s = evaluate("spectrum(q^2/2 + p^2/2, 5)", Mode::Poly);
  REQUIRE(std::holds_alternative<Spectrum>(s));
  CHECK(std::get<Spectrum>(s).dim == 5);
  CHECK(std::get<Spectrum>(s).eigenvalues.front() == doctest::Approx(0.5));
  CHECK(std::get<Spectrum>(evaluate("spectrum(q*p)", Mode::Poly)).dim == kDefaultSpectrumDim);
}

TEST_CASE("cross and dot in poly mode go through the matrices") {
  // sp_cross(ham q^2/2, ham p^2/2) pulled back, and the trace product.
  Poly2 c = std::get<Poly2>(evaluate("cross(q^2/2, p^2/2)", Mode::Poly));
  Endo2 expected = sp_cross(ham(QuadPoly::q2_half()).matrix, ham(QuadPoly::p2_half()).matrix);
  CHECK(ham(c.to_quad()).matrix == expected);
  // <J, J> = 1 for the oscillator.
  CHECK(eval_text("dot(q^2/2 + p^2/2, q^2/2 + p^2/2)", Mode::Poly) == "1");
}

TEST_CASE("evaluation errors carry positions") {
  auto expect_eval = [](std::string_view input, Mode mode, std::size_t pos) {
    CAPTURE(input);
    try {
      evaluate(input, mode);
      FAIL("expected EvalError");
    } catch (const EvalError& e) {
      CHECK(e.position() == pos);
    }
  };
  expect_eval("{i, j}", Mode::Quaternion, 0);
  expect_eval("i + x", Mode::Quaternion, 4);
  expect_eval("q*p*q", Mode::Poly, 3);
  expect_eval("q / 0", Mode::Poly, 2);
  expect_eval("ham(q)", Mode::Poly, 4);
  expect_eval("spectrum(q*p, 2)", Mode::Poly, 14);
  expect_eval("spectrum(q*p, 1000)", Mode::Poly, 14);
  CHECK_THROWS_AS(parse_mode("octonion"), EvalError);
  CHECK(parse_mode("endf") == Mode::Endf);
  CHECK(mode_name(Mode::Poly) == "poly");
}

TEST_CASE("value_to_json") {
  auto j = value_to_json(evaluate("i*j", Mode::Quaternion));
  CHECK(j.dump().find("\"k\"") != std::string::npos);
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(0.5) == "0.5");
  CHECK(endf_to_string(Endo2::J() * R(2) - Endo2::id()) == "-id + 2*J");
}

TEST_CASE("fuzz: random inputs never crash") {
  const std::string alphabet = "qpijkeABJid0123456789+-*/^(){}[], hamcrosdtqunizspe";
  Xoshiro256 rng(91);
  int parsed = 0, rejected = 0;
  for (int t = 0; t < 100000; ++t) {
    std::size_t len = static_cast<std::size_t>(rng.uniform(0, 24));
    std::string s;
    for (std::size_t k = 0; k < len; ++k) s += alphabet[static_cast<std::size_t>(rng.uniform(0, alphabet.size() - 1))];
    if (rng.uniform(0, 9) == 0 && !s.empty()) s[static_cast<std::size_t>(rng.uniform(0, s.size() - 1))] = static_cast<char>(rng.uniform(0, 255));
    Mode mode = static_cast<Mode>(t % 3);
    try {
      evaluate(s, mode);
      ++parsed;
    } catch (const ParseError& e) {
      REQUIRE(e.position() <= s.size());
      ++rejected;
    } catch (const EvalError& e) {
      REQUIRE((e.position() == EvalError::npos || e.position() <= s.size()));
      ++rejected;
    }
  }
  CHECK(parsed + rejected == 100000);
  CHECK(parsed > 0);
}
