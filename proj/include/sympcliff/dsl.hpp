#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "sympcliff/endf_sp.hpp"
#include "sympcliff/poisson.hpp"
#include "sympcliff/quaternion.hpp"
#include "sympcliff/weyl.hpp"

namespace sympcliff::dsl {

enum class TokenKind { Number, Ident, Op, LParen, RParen, LBrace, RBrace, LBracket, RBracket, Comma, Caret };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position;  // byte offset
  friend bool operator==(const Token&, const Token&) = default;
};

std::string token_kind_name(TokenKind kind);

/// Longest-match lexer. Throws ParseError at the first unknown byte.
std::vector<Token> tokenize(std::string_view input);

enum class ExprKind { Literal, Symbol, Neg, Add, Sub, Mul, Div, Pow, PoissonBracket, Commutator, Call };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind;
  Rational value;         // Literal
  std::string name;       // Symbol, Call
  int exponent = 0;       // Pow
  std::vector<ExprPtr> args;
  std::size_t position = 0;

  /// Structural equality; positions are ignored.
  friend bool operator==(const Expr& a, const Expr& b);
};

inline constexpr std::size_t kMaxNesting = 256;
inline constexpr const char* kFunctions[] = {"cross", "dot", "ham", "quantize", "spectrum"};

/// Recursive descent over
///   expr    := term (("+"|"-") term)* ;
///   term    := factor (("*"|"/") factor)* ;
///   factor  := "-" factor | primary ("^" integer)? ;
///   primary := number | ident | "(" expr ")" | "{" expr "," expr "}"
///            | "[" expr "," expr "]" | ident "(" expr ("," expr)* ")" ;
/// `input_size` positions the end-of-input error.
ExprPtr parse(const std::vector<Token>& tokens, std::size_t input_size);
ExprPtr parse(std::string_view input);

/// Pretty-printer with minimal parentheses; parse(print(e)) == e.
std::string print(const Expr& e);

/// Tree form, e.g. "PoissonBracket(Mul(q,p),Div(Pow(q,2),2))".
std::string tree_string(const Expr& e);

enum class Mode { Quaternion, Poly, Endf };
/// Throws EvalError for an unknown mode name.
Mode parse_mode(std::string_view name);
std::string mode_name(Mode mode);

struct Spectrum {
  std::size_t dim;
  std::vector<double> eigenvalues;
};

using Value = std::variant<Quaternion, Poly2, Endo2, WeylElement, Spectrum>;

inline constexpr std::size_t kDefaultSpectrumDim = 8;
inline constexpr std::size_t kMaxSpectrumDim = 256;

/// Evaluates in the algebra of `mode`. Numbers denote scalar multiples of the
/// unit of that algebra; {f,g} is the Poisson bracket (poly mode only) and
/// [x,y] = xy - yx. Throws EvalError (with the position of the offending
/// node) on type errors and failed operations.
Value evaluate(const Expr& e, Mode mode);
Value evaluate(std::string_view input, Mode mode);

/// Text form in DSL syntax where one exists.
std::string format_value(const Value& v);
nlohmann::json value_to_json(const Value& v);
/// "%.12g" with negative zero printed as 0.
std::string format_double(double x);

/// sum of c_b * b over b in {id, J, A, B}, e.g. "2*J".
std::string endf_to_string(const Endo2& m);

}  // namespace sympcliff::dsl
