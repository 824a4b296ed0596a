#include <array>
#include <initializer_list>
#include <optional>

#include "qseries/dsl.hpp"

namespace qseries::dsl {

namespace {

constexpr std::array<std::pair<std::string_view, Function>, 11> kFunctions{{
    {"phi", Function::phi},
    {"psi", Function::psi},
    {"f", Function::f},
    {"fprod", Function::fprod},
    {"chi", Function::chi},
    {"theta1", Function::theta1},
    {"theta2", Function::theta2},
    {"theta3", Function::theta3},
    {"theta4", Function::theta4},
    {"S", Function::S},
    {"T", Function::T},
}};

std::optional<Function> function_named(std::string_view name) {
  for (const auto& [n, fn] : kFunctions)
    if (n == name) return fn;
  return std::nullopt;
}

bool takes_parameter(Function fn) {
  switch (fn) {
    case Function::theta1:
    case Function::theta2:
    case Function::theta3:
    case Function::theta4:
    case Function::S:
    case Function::T: return true;
    default: return false;
  }
}

SourceSpan join(SourceSpan a, SourceSpan b) { return {a.start, b.end}; }

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  Expr parse_all() {
    if (tokens_.empty() || tokens_.back().kind != TokenKind::End)
      throw Error(ErrorKind::ParseError, "token stream must end with End", SourceSpan{});
    Expr e = expr();
    expect({TokenKind::End});
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  bool at(TokenKind k, std::size_t ahead = 0) const { return peek(ahead).kind == k; }
  const Token& advance() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  [[noreturn]] void fail(std::initializer_list<TokenKind> expected, std::string_view what = {}) const {
    std::string msg = "expected ";
    if (!what.empty()) {
      msg += what;
    } else {
      bool first = true;
      for (const TokenKind k : expected) {
        msg += first ? "" : " or ";
        msg += to_string(k);
        first = false;
      }
    }
    const Token& t = peek();
    msg += t.kind == TokenKind::End ? ", found end of input" : ", found '" + t.text + "'";
    throw Error(ErrorKind::ParseError, msg, t.span);
  }

  const Token& expect(std::initializer_list<TokenKind> kinds, std::string_view what = {}) {
    for (const TokenKind k : kinds)
      if (at(k)) return advance();
    fail(kinds, what);
  }

  Expr expr() {
    Expr lhs = term();
    while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
      const auto kind = advance().kind == TokenKind::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
      Expr rhs = term();
      const SourceSpan span = join(lhs.span, rhs.span);
      lhs = Expr::binary(kind, std::move(lhs), std::move(rhs), span);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (at(TokenKind::Star) || at(TokenKind::Slash)) {
      const auto kind = advance().kind == TokenKind::Star ? Expr::Kind::Mul : Expr::Kind::Div;
      Expr rhs = unary();
      const SourceSpan span = join(lhs.span, rhs.span);
      lhs = Expr::binary(kind, std::move(lhs), std::move(rhs), span);
    }
    return lhs;
  }

  Expr unary() {
    if (at(TokenKind::Minus)) {
      const SourceSpan start = advance().span;
      Expr child = unary();
      const SourceSpan span = join(start, child.span);
      return Expr::unary(Expr::Kind::Neg, std::move(child), span);
    }
    return factor();
  }

  Expr factor() {
    Expr base = atom();
    if (at(TokenKind::Caret)) {
      advance();
      const Token& t = expect({TokenKind::Integer}, "a positive integer exponent");
      const long k = positive_int(t);
      return Expr::pow(std::move(base), k, join(base.span, t.span));
    }
    return base;
  }

  long positive_int(const Token& t) const {
    long v = 0;
    try {
      v = std::stol(t.text);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "integer out of range", t.span);
    }
    if (v < 1) throw Error(ErrorKind::ParseError, "exponent must be a positive integer", t.span);
    return v;
  }

  long integer(const Token& t) const {
    try {
      return std::stol(t.text);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "integer out of range", t.span);
    }
  }

  // rational := INT ('/' INT)?
  std::pair<Rational, SourceSpan> rational() {
    const Token& n = expect({TokenKind::Integer});
    SourceSpan span = n.span;
    mpz_class num(n.text, 10), den(1);
    if (at(TokenKind::Slash) && at(TokenKind::Integer, 1)) {
      advance();
      const Token& d = advance();
      den = mpz_class(d.text, 10);
      if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator", d.span);
      span = join(span, d.span);
    }
    return {Rational(num, den), span};
  }

  Expr atom() {
    switch (peek().kind) {
      case TokenKind::Integer: {
        auto [value, span] = rational();
        return Expr::literal(std::move(value), span);
      }
      case TokenKind::R5: return Expr::sqrt5(advance().span);
      case TokenKind::Q: {
        const SourceSpan start = advance().span;
        if (!at(TokenKind::Caret) || !at(TokenKind::Integer, 1)) return Expr::qpow(Rational(1), start);
        advance();
        auto [value, span] = rational();
        return Expr::qpow(std::move(value), join(start, span));
      }
      case TokenKind::Ident: return call();
      case TokenKind::LParen: {
        const SourceSpan open = advance().span;
        Expr inner = expr();
        inner.span = join(open, expect({TokenKind::RParen}).span);
        return inner;
      }
      default:
        fail({TokenKind::Integer, TokenKind::R5, TokenKind::Q, TokenKind::Ident, TokenKind::LParen},
             "a number, 'r5', 'q', a function call or '('");
    }
  }

  // argform := '-'? 'q' ('^' posint)?
  ArgSpec argform() {
    ArgSpec arg;
    if (at(TokenKind::Minus)) {
      advance();
      arg.negative = true;
    }
    expect({TokenKind::Q}, arg.negative ? "'q'" : "an argument of the form [-]q[^k]");
    if (at(TokenKind::Caret)) {
      advance();
      arg.power = positive_int(expect({TokenKind::Integer}, "a positive integer power of q"));
    }
    return arg;
  }

  // angle := '-'? (INT ('*' 'pi' '/' '10')? | 'pi' '/' '10')
  long angle() {
    long sign = 1;
    if (at(TokenKind::Minus)) {
      advance();
      sign = -1;
    }
    long m = 1;
    bool need_pi = false;
    if (at(TokenKind::Integer)) {
      m = integer(advance());
      if (!at(TokenKind::Star)) return sign * m;
      advance();
      need_pi = true;
    }
    expect({TokenKind::Pi}, need_pi ? "'pi'" : "an angle index or pi/10");
    expect({TokenKind::Slash});
    const Token& ten = expect({TokenKind::Integer}, "10");
    if (ten.text != "10") throw Error(ErrorKind::ParseError, "angles are written as m*pi/10", ten.span);
    return sign * m;
  }

  long signed_int() {
    long sign = 1;
    if (at(TokenKind::Minus)) {
      advance();
      sign = -1;
    }
    return sign * integer(expect({TokenKind::Integer}));
  }

  Expr call() {
    const Token& name = advance();
    const auto fn = function_named(name.text);
    if (!fn) throw Error(ErrorKind::ParseError, "unknown function '" + name.text + "'", name.span);
    expect({TokenKind::LParen});
    long param = 0;
    if (takes_parameter(*fn)) {
      param = (*fn == Function::S || *fn == Function::T) ? signed_int() : angle();
      expect({TokenKind::Semicolon});
    }
    const ArgSpec arg = argform();
    const Token& close = expect({TokenKind::RParen});
    return Expr::call(*fn, arg, param, join(name.span, close.span));
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

std::string print_arg(ArgSpec a) {
  std::string s = a.negative ? "-q" : "q";
  if (a.power != 1) s += "^" + std::to_string(a.power);
  return s;
}

}  // namespace

std::string_view to_string(Function fn) {
  for (const auto& [n, f] : kFunctions)
    if (f == fn) return n;
  return "?";
}

Expr Expr::literal(Rational v, SourceSpan span) {
  Expr e;
  e.kind = Kind::Literal;
  e.value = std::move(v);
  e.span = span;
  return e;
}

Expr Expr::sqrt5(SourceSpan span) {
  Expr e;
  e.kind = Kind::SqrtFive;
  e.span = span;
  return e;
}

Expr Expr::qpow(Rational r, SourceSpan span) {
  Expr e;
  e.kind = Kind::QPow;
  e.value = std::move(r);
  e.span = span;
  return e;
}

Expr Expr::unary(Kind kind, Expr child, SourceSpan span) {
  Expr e;
  e.kind = kind;
  e.children.push_back(std::move(child));
  e.span = span;
  return e;
}

Expr Expr::binary(Kind kind, Expr lhs, Expr rhs, SourceSpan span) {
  Expr e;
  e.kind = kind;
  e.children.push_back(std::move(lhs));
  e.children.push_back(std::move(rhs));
  e.span = span;
  return e;
}

Expr Expr::pow(Expr base, long exponent, SourceSpan span) {
  Expr e = unary(Kind::Pow, std::move(base), span);
  e.param = exponent;
  return e;
}

Expr Expr::call(Function fn, ArgSpec arg, long param, SourceSpan span) {
  Expr e;
  e.kind = Kind::Call;
  e.fn = fn;
  e.arg = arg;
  e.param = param;
  e.span = span;
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Literal:
    case Expr::Kind::QPow: return a.value == b.value;
    case Expr::Kind::SqrtFive: return true;
    case Expr::Kind::Pow: return a.param == b.param && a.children == b.children;
    case Expr::Kind::Call: return a.fn == b.fn && a.arg == b.arg && a.param == b.param;
    default: return a.children == b.children;
  }
}

Expr parse(const std::vector<Token>& tokens) { return Parser(tokens).parse_all(); }

Expr parse(std::string_view text) { return parse(tokenize(text)); }

std::string print(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Literal: return e.value.str();
    case K::SqrtFive: return "r5";
    case K::QPow: return e.value == Rational(1) ? "q" : "q^" + e.value.str();
    case K::Neg: return "(-" + print(e.children[0]) + ")";
    case K::Pow: return "(" + print(e.children[0]) + ")^" + std::to_string(e.param);
    case K::Add:
    case K::Sub:
    case K::Mul:
    case K::Div: {
      const char* op = e.kind == K::Add ? " + " : e.kind == K::Sub ? " - " : e.kind == K::Mul ? " * " : " / ";
      std::string rhs = print(e.children[1]);
      // "a / 2" after a literal numerator would lex back as one rational
      if (e.kind == K::Div && e.children[1].kind == K::Literal) rhs = "(" + rhs + ")";
      return "(" + print(e.children[0]) + op + rhs + ")";
    }
    case K::Call: {
      std::string s(to_string(e.fn));
      s += "(";
      if (takes_parameter(e.fn)) s += std::to_string(e.param) + "; ";
      return s + print_arg(e.arg) + ")";
    }
  }
  return {};
}

}  // namespace qseries::dsl
