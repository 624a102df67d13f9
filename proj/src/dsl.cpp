#include "sympcliff/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <iterator>

#include "sympcliff/error.hpp"
#include "sympcliff/fock.hpp"
#include "sympcliff/format.hpp"

namespace sympcliff::dsl {

std::string token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Number: return "Number";
    case TokenKind::Ident: return "Ident";
    case TokenKind::Op: return "Op";
    case TokenKind::LParen: return "LParen";
    case TokenKind::RParen: return "RParen";
    case TokenKind::LBrace: return "LBrace";
    case TokenKind::RBrace: return "RBrace";
    case TokenKind::LBracket: return "LBracket";
    case TokenKind::RBracket: return "RBracket";
    case TokenKind::Comma: return "Comma";
    case TokenKind::Caret: return "Caret";
  }
  return "?";
}

namespace {
bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
}  // namespace

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < input.size()) {
    char c = input[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (is_digit(c)) {
      while (i < input.size() && is_digit(input[i])) ++i;
      out.push_back({TokenKind::Number, std::string(input.substr(start, i - start)), start});
      continue;
    }
    if (is_letter(c)) {
      while (i < input.size() && (is_letter(input[i]) || is_digit(input[i]))) ++i;
      out.push_back({TokenKind::Ident, std::string(input.substr(start, i - start)), start});
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': case '-': case '*': case '/': kind = TokenKind::Op; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case '{': kind = TokenKind::LBrace; break;
      case '}': kind = TokenKind::RBrace; break;
      case '[': kind = TokenKind::LBracket; break;
      case ']': kind = TokenKind::RBracket; break;
      case ',': kind = TokenKind::Comma; break;
      case '^': kind = TokenKind::Caret; break;
      default: {
        char buf[8];
        std::snprintf(buf, sizeof buf, "0x%02x", static_cast<unsigned char>(c));
        throw ParseError(std::string("unexpected character ") + buf, start);
      }
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  return out;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value || a.name != b.name || a.exponent != b.exponent ||
      a.args.size() != b.args.size())
    return false;
  for (std::size_t k = 0; k < a.args.size(); ++k)
    if (!(*a.args[k] == *b.args[k])) return false;
  return true;
}

namespace {

ExprPtr make(ExprKind kind, std::size_t pos, std::vector<ExprPtr> args = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->position = pos;
  e->args = std::move(args);
  return e;
}

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, std::size_t end) : toks_(tokens), end_(end) {}

  ExprPtr run() {
    ExprPtr e = expr();
    if (!at_end()) throw ParseError("unexpected '" + peek().text + "'", pos(), {"+", "-", "*", "/", "end of input"});
    return e;
  }

 private:
  const std::vector<Token>& toks_;
  std::size_t end_;
  std::size_t i_ = 0;
  std::size_t depth_ = 0;

  bool at_end() const { return i_ >= toks_.size(); }
  const Token& peek() const { return toks_[i_]; }
  std::size_t pos() const { return at_end() ? end_ : toks_[i_].position; }
  bool is(TokenKind k) const { return !at_end() && peek().kind == k; }
  bool is_op(char c) const { return is(TokenKind::Op) && peek().text[0] == c; }

  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
    std::string found = at_end() ? "end of input" : "'" + peek().text + "'";
    throw ParseError(what + ", found " + found, pos(), std::move(expected));
  }

  void expect(TokenKind k, const char* text) {
    if (!is(k)) fail(std::string("expected '") + text + "'", {text});
    ++i_;
  }

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > kMaxNesting) throw ParseError("expression nested too deeply", p.pos());
    }
    ~DepthGuard() { --p.depth_; }
  };

  ExprPtr expr() {
    ExprPtr left = term();
    while (is_op('+') || is_op('-')) {
      const Token& op = peek();
      ++i_;
      ExprPtr right = term();
      left = make(op.text[0] == '+' ? ExprKind::Add : ExprKind::Sub, op.position, {left, right});
    }
    return left;
  }

  ExprPtr term() {
    ExprPtr left = factor();
    while (is_op('*') || is_op('/')) {
      const Token& op = peek();
      ++i_;
      ExprPtr right = factor();
      left = make(op.text[0] == '*' ? ExprKind::Mul : ExprKind::Div, op.position, {left, right});
    }
    return left;
  }

  ExprPtr factor() {
    DepthGuard guard(*this);
    if (is_op('-')) {
      std::size_t p = peek().position;
      ++i_;
      return make(ExprKind::Neg, p, {factor()});
    }
    ExprPtr base = primary();
    if (!is(TokenKind::Caret)) return base;
    std::size_t caret = peek().position;
    ++i_;
    if (!is(TokenKind::Number)) fail("expected integer exponent", {"integer"});
    const Token& exp = peek();
    mpz_class value(exp.text, 10);
    if (value != 1 && value != 2) throw ParseError("exponent must be 1 or 2", exp.position, {"1", "2"});
    ++i_;
    auto e = make(ExprKind::Pow, caret, {base});
    std::const_pointer_cast<Expr>(e)->exponent = static_cast<int>(value.get_si());
    return e;
  }

  ExprPtr primary() {
    static const std::vector<std::string> kPrimaryStart = {"number", "identifier", "(", "{", "[", "-"};
    if (at_end()) fail("expected an operand", kPrimaryStart);
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Number: {
        ++i_;
        auto e = std::const_pointer_cast<Expr>(make(ExprKind::Literal, t.position));
        e->value = Rational(mpq_class(mpz_class(t.text, 10)));
        return e;
      }
      case TokenKind::Ident: {
        ++i_;
        if (!is(TokenKind::LParen)) {
          auto e = std::const_pointer_cast<Expr>(make(ExprKind::Symbol, t.position));
          e->name = t.text;
          return e;
        }
        if (std::find(std::begin(kFunctions), std::end(kFunctions), t.text) == std::end(kFunctions))
          throw ParseError("unknown function '" + t.text + "'", t.position,
                           std::vector<std::string>(std::begin(kFunctions), std::end(kFunctions)));
        ++i_;
        std::vector<ExprPtr> args{expr()};
        while (is(TokenKind::Comma)) {
          ++i_;
          args.push_back(expr());
        }
        expect(TokenKind::RParen, ")");
        auto e = std::const_pointer_cast<Expr>(make(ExprKind::Call, t.position, std::move(args)));
        e->name = t.text;
        return e;
      }
      case TokenKind::LParen: {
        ++i_;
        ExprPtr e = expr();
        expect(TokenKind::RParen, ")");
        return e;
      }
      case TokenKind::LBrace:
      case TokenKind::LBracket: {
        bool brace = t.kind == TokenKind::LBrace;
        ++i_;
        ExprPtr l = expr();
        expect(TokenKind::Comma, ",");
        ExprPtr r = expr();
        expect(brace ? TokenKind::RBrace : TokenKind::RBracket, brace ? "}" : "]");
        return make(brace ? ExprKind::PoissonBracket : ExprKind::Commutator, t.position, {l, r});
      }
      default:
        fail("expected an operand", kPrimaryStart);
    }
  }
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Add:
    case ExprKind::Sub: return 1;
    case ExprKind::Mul:
    case ExprKind::Div: return 2;
    case ExprKind::Neg: return 3;
    case ExprKind::Pow: return 4;
    case ExprKind::Literal: return (e.value.sign() < 0 || !e.value.is_integer()) ? 0 : 5;
    default: return 5;
  }
}

std::string wrap(const Expr& e, int min_prec) {
  std::string s = print(e);
  return precedence(e) >= min_prec ? s : "(" + s + ")";
}

}  // namespace

ExprPtr parse(const std::vector<Token>& tokens, std::size_t input_size) { return Parser(tokens, input_size).run(); }

ExprPtr parse(std::string_view input) { return parse(tokenize(input), input.size()); }

std::string print(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Literal: return e.value.to_string();
    case ExprKind::Symbol: return e.name;
    case ExprKind::Neg: return "-" + wrap(*e.args[0], 3);
    case ExprKind::Add: return wrap(*e.args[0], 1) + " + " + wrap(*e.args[1], 2);
    case ExprKind::Sub: return wrap(*e.args[0], 1) + " - " + wrap(*e.args[1], 2);
    case ExprKind::Mul: return wrap(*e.args[0], 2) + "*" + wrap(*e.args[1], 3);
    case ExprKind::Div: return wrap(*e.args[0], 2) + "/" + wrap(*e.args[1], 3);
    case ExprKind::Pow: return wrap(*e.args[0], 5) + "^" + std::to_string(e.exponent);
    case ExprKind::PoissonBracket: return "{" + print(*e.args[0]) + ", " + print(*e.args[1]) + "}";
    case ExprKind::Commutator: return "[" + print(*e.args[0]) + ", " + print(*e.args[1]) + "]";
    case ExprKind::Call: {
      std::string s = e.name + "(";
      for (std::size_t k = 0; k < e.args.size(); ++k) s += (k ? ", " : "") + print(*e.args[k]);
      return s + ")";
    }
  }
  return "";
}

std::string tree_string(const Expr& e) {
  auto node = [&](const char* name) {
    std::string s = std::string(name) + "(";
    for (std::size_t k = 0; k < e.args.size(); ++k) s += (k ? "," : "") + tree_string(*e.args[k]);
    return s + ")";
  };
  switch (e.kind) {
    case ExprKind::Literal: return e.value.to_string();
    case ExprKind::Symbol: return e.name;
    case ExprKind::Neg: return node("Neg");
    case ExprKind::Add: return node("Add");
    case ExprKind::Sub: return node("Sub");
    case ExprKind::Mul: return node("Mul");
    case ExprKind::Div: return node("Div");
    case ExprKind::Pow: return "Pow(" + tree_string(*e.args[0]) + "," + std::to_string(e.exponent) + ")";
    case ExprKind::PoissonBracket: return node("PoissonBracket");
    case ExprKind::Commutator: return node("Commutator");
    case ExprKind::Call: {
      std::string s = "Call(" + e.name;
      for (const auto& a : e.args) s += "," + tree_string(*a);
      return s + ")";
    }
  }
  return "";
}

Mode parse_mode(std::string_view name) {
  if (name == "quaternion") return Mode::Quaternion;
  if (name == "poly") return Mode::Poly;
  if (name == "endf") return Mode::Endf;
  throw EvalError("unknown mode '" + std::string(name) + "' (expected quaternion, poly or endf)");
}

std::string mode_name(Mode mode) {
  switch (mode) {
    case Mode::Quaternion: return "quaternion";
    case Mode::Poly: return "poly";
    case Mode::Endf: return "endf";
  }
  return "?";
}

namespace {

std::string type_name(const Value& v) {
  switch (v.index()) {
    case 0: return "quaternion";
    case 1: return "polynomial";
    case 2: return "End F element";
    case 3: return "Weyl operator";
    default: return "spectrum";
  }
}

class Evaluator {
 public:
  explicit Evaluator(Mode mode) : mode_(mode) {}

  Value eval(const Expr& e) {
    try {
      return eval_node(e);
    } catch (const EvalError&) {
      throw;
    } catch (const Error& err) {
      throw EvalError(err.what(), e.position);
    }
  }

 private:
  Mode mode_;

  [[noreturn]] static void fail(const std::string& msg, const Expr& e) { throw EvalError(msg, e.position); }

  Value scalar(const Rational& r) const {
    switch (mode_) {
      case Mode::Quaternion: return Quaternion{r, {}};
      case Mode::Poly: return Poly2::constant(r);
      case Mode::Endf: return Endo2::id() * r;
    }
    return Poly2::constant(r);
  }

  Value symbol(const Expr& e) const {
    const std::string& n = e.name;
    switch (mode_) {
      case Mode::Quaternion:
        if (n == "e") return Quaternion::e();
        if (n == "i") return Quaternion::i();
        if (n == "j") return Quaternion::j();
        if (n == "k") return Quaternion::k();
        fail("unknown symbol '" + n + "' in quaternion mode (expected e, i, j, k)", e);
      case Mode::Poly:
        if (n == "q") return Poly2::coord_q();
        if (n == "p") return Poly2::coord_p();
        fail("unknown symbol '" + n + "' in poly mode (expected q, p)", e);
      case Mode::Endf:
        if (n == "id") return Endo2::id();
        if (n == "J") return Endo2::J();
        if (n == "A") return Endo2::A();
        if (n == "B") return Endo2::B();
        fail("unknown symbol '" + n + "' in endf mode (expected id, J, A, B)", e);
    }
    fail("unknown symbol '" + n + "'", e);
  }

  // Constant polynomials act as scalars on Weyl operators.
  static bool as_weyl(const Value& v, WeylElement& out) {
    if (auto w = std::get_if<WeylElement>(&v)) {
      out = *w;
      return true;
    }
    if (auto f = std::get_if<Poly2>(&v); f && f->degree() <= 0) {
      out = WeylElement::scalar(f->c0);
      return true;
    }
    return false;
  }

  template <class Fn>
  Value combine(const Value& a, const Value& b, const Expr& e, const char* what, Fn fn) const {
    if (a.index() == b.index() && a.index() < 3) {
      return std::visit(
          [&](const auto& x) -> Value {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Spectrum> || std::is_same_v<T, WeylElement>) {
              fail("internal", e);
            } else {
              return fn(x, std::get<T>(b));
            }
          },
          a);
    }
    WeylElement wa, wb;
    if ((a.index() == 3 || b.index() == 3) && as_weyl(a, wa) && as_weyl(b, wb)) return fn(wa, wb);
    fail(std::string("cannot ") + what + " " + type_name(a) + " and " + type_name(b), e);
  }

  Value multiply(const Value& a, const Value& b, const Expr& e) const {
    return combine(a, b, e, "multiply", [](const auto& x, const auto& y) -> Value { return x * y; });
  }

  Value divide(const Value& a, const Value& b, const Expr& e) const {
    if (auto y = std::get_if<Quaternion>(&b)) {
      if (y->is_zero()) throw DivisionByZero();
      return multiply(a, y->inverse(), e);
    }
    if (auto y = std::get_if<Endo2>(&b)) {
      if (y->det().is_zero()) fail("division by a singular End F element", e);
      return multiply(a, y->inverse(), e);
    }
    if (auto y = std::get_if<Poly2>(&b)) {
      if (y->degree() > 0) fail("division by a non-constant polynomial", e);
      if (y->c0.is_zero()) throw DivisionByZero();
      Rational inv = y->c0.inverse();
      if (auto w = std::get_if<WeylElement>(&a)) return *w * GaussianRational(inv);
      return multiply(a, Poly2::constant(inv), e);
    }
    fail("cannot divide by a " + type_name(b), e);
  }

  Value eval_node(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Literal: return scalar(e.value);
      case ExprKind::Symbol: return symbol(e);
      case ExprKind::Neg: {
        Value v = eval(*e.args[0]);
        if (std::holds_alternative<Spectrum>(v)) fail("cannot negate a spectrum", e);
        return std::visit(
            [&](const auto& x) -> Value {
              if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Spectrum>) fail("internal", e);
              else return -x;
            },
            v);
      }
      case ExprKind::Add:
        return combine(eval(*e.args[0]), eval(*e.args[1]), e, "add",
                       [](const auto& x, const auto& y) -> Value { return x + y; });
      case ExprKind::Sub:
        return combine(eval(*e.args[0]), eval(*e.args[1]), e, "subtract",
                       [](const auto& x, const auto& y) -> Value { return x - y; });
      case ExprKind::Mul: return multiply(eval(*e.args[0]), eval(*e.args[1]), e);
      case ExprKind::Div: return divide(eval(*e.args[0]), eval(*e.args[1]), e);
      case ExprKind::Pow: {
        Value v = eval(*e.args[0]);
        return e.exponent == 1 ? v : multiply(v, v, e);
      }
      case ExprKind::PoissonBracket: {
        if (mode_ != Mode::Poly)
          fail("Poisson bracket {,} is only defined in poly mode (use [,] for the commutator)", e);
        Value a = eval(*e.args[0]), b = eval(*e.args[1]);
        auto f = std::get_if<Poly2>(&a);
        auto g = std::get_if<Poly2>(&b);
        if (!f || !g) fail("Poisson bracket needs polynomials, got " + type_name(a) + " and " + type_name(b), e);
        return pbracket(*f, *g);
      }
      case ExprKind::Commutator: {
        Value a = eval(*e.args[0]), b = eval(*e.args[1]);
        return combine(a, b, e, "take the commutator of",
                       [](const auto& x, const auto& y) -> Value { return x * y - y * x; });
      }
      case ExprKind::Call: return call(e);
    }
    fail("unknown expression", e);
  }

  void arity(const Expr& e, std::size_t lo, std::size_t hi) const {
    if (e.args.size() < lo || e.args.size() > hi)
      fail(e.name + " takes " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + " or " + std::to_string(hi)) +
               " argument(s), got " + std::to_string(e.args.size()),
           e);
  }

  QuadPoly quad_arg(const Expr& arg, const Expr& call) {
    Value v = eval(arg);
    auto f = std::get_if<Poly2>(&v);
    if (!f) fail(call.name + " expects a polynomial, got " + type_name(v), arg);
    if (!f->is_homogeneous_quadratic()) fail(call.name + " expects a homogeneous quadratic polynomial", arg);
    return f->to_quad();
  }

  Value call(const Expr& e) {
    const std::string& n = e.name;
    if (n == "ham" || n == "quantize" || n == "spectrum") {
      if (mode_ != Mode::Poly) fail(n + " is only available in poly mode", e);
      arity(e, 1, n == "spectrum" ? 2 : 1);
      QuadPoly f = quad_arg(*e.args[0], e);
      if (n == "ham") return ham(f).matrix;
      if (n == "quantize") return weyl_quantize(f);
      std::size_t dim = kDefaultSpectrumDim;
      if (e.args.size() == 2) {
        Value d = eval(*e.args[1]);
        auto c = std::get_if<Poly2>(&d);
        if (!c || c->degree() > 0 || !c->c0.is_integer() || c->c0 < Rational(3) ||
            c->c0 > Rational(static_cast<long>(kMaxSpectrumDim)))
          fail("spectrum dimension must be an integer in [3, " + std::to_string(kMaxSpectrumDim) + "]", *e.args[1]);
        dim = c->c0.num().get_ui();
      }
      return Spectrum{dim, spectrum(f, dim)};
    }
    // cross, dot
    arity(e, 2, 2);
    Value a = eval(*e.args[0]), b = eval(*e.args[1]);
    if (a.index() != b.index()) fail(n + " needs two arguments of the same type", e);
    bool is_cross = n == "cross";
    if (auto x = std::get_if<Quaternion>(&a)) {
      const auto& y = std::get<Quaternion>(b);
      if (!x->is_pure() || !y.is_pure()) fail(n + " needs pure quaternions", e);
      if (is_cross) return Quaternion::pure(cross(x->vec, y.vec));
      return scalar(dot(x->vec, y.vec));
    }
    if (auto x = std::get_if<Endo2>(&a)) {
      const auto& y = std::get<Endo2>(b);
      if (is_cross) return sp_cross(*x, y);
      return scalar(trace_inner(*x, y));
    }
    if (std::holds_alternative<Poly2>(a)) {
      QuadPoly f = quad_arg(*e.args[0], e), g = quad_arg(*e.args[1], e);
      if (is_cross) return Poly2::from(ham_inverse(sp_cross(ham(f).matrix, ham(g).matrix)));
      return scalar(trace_inner(ham(f).matrix, ham(g).matrix));
    }
    fail(n + " is not defined for " + type_name(a), e);
  }
};

}  // namespace

Value evaluate(const Expr& e, Mode mode) { return Evaluator(mode).eval(e); }

Value evaluate(std::string_view input, Mode mode) { return evaluate(*parse(input), mode); }

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s = buf;
  return s == "-0" ? "0" : s;
}

std::string endf_to_string(const Endo2& m) {
  std::vector<std::pair<Rational, std::string>> parts;
  for (EndfBasis b : kEndfBasis) parts.emplace_back(trace_inner(m, basis_matrix(b)), basis_name(b));
  return format_combination(parts);
}

std::string format_value(const Value& v) {
  struct Visitor {
    std::string operator()(const Quaternion& x) const { return x.to_string(); }
    std::string operator()(const Poly2& x) const { return x.to_string(); }
    std::string operator()(const Endo2& x) const { return endf_to_string(x); }
    std::string operator()(const WeylElement& x) const { return x.to_string(); }
    std::string operator()(const Spectrum& x) const {
      std::string s = "[";
      for (std::size_t k = 0; k < x.eigenvalues.size(); ++k) s += (k ? ", " : "") + format_double(x.eigenvalues[k]);
      return s + "]";
    }
  };
  return std::visit(Visitor{}, v);
}

nlohmann::json value_to_json(const Value& v) {
  using nlohmann::json;
  struct Visitor {
    json operator()(const Quaternion& x) const {
      return {{"type", "quaternion"},
              {"value", x.to_string()},
              {"components",
               {x.scalar.to_string(), x.vec.x.to_string(), x.vec.y.to_string(), x.vec.z.to_string()}}};
    }
    json operator()(const Poly2& x) const {
      return {{"type", "poly"},
              {"value", x.to_string()},
              {"coefficients",
               {{"1", x.c0.to_string()},
                {"q", x.cq.to_string()},
                {"p", x.cp.to_string()},
                {"q^2", x.cqq.to_string()},
                {"p^2", x.cpp.to_string()},
                {"q*p", x.cqp.to_string()}}}};
    }
    json operator()(const Endo2& x) const {
      return {{"type", "endf"},
              {"value", endf_to_string(x)},
              {"matrix", {{x(0, 0).to_string(), x(0, 1).to_string()}, {x(1, 0).to_string(), x(1, 1).to_string()}}}};
    }
    json operator()(const WeylElement& x) const {
      json terms = json::array();
      for (const auto& [mn, c] : x.terms())
        terms.push_back({{"q", mn.first}, {"p", mn.second}, {"re", c.re.to_string()}, {"im", c.im.to_string()}});
      return {{"type", "weyl"}, {"value", x.to_string()}, {"terms", terms}};
    }
    json operator()(const Spectrum& x) const {
      return {{"type", "spectrum"}, {"dim", x.dim}, {"eigenvalues", x.eigenvalues}};
    }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace sympcliff::dsl
