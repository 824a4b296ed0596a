#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qseries/error.hpp"
#include "qseries/kernels.hpp"
#include "qseries/rational.hpp"
#include "qseries/series.hpp"
#include "qseries/special.hpp"

namespace qseries::dsl {

enum class TokenKind {
  Integer,
  Ident,
  Q,
  R5,
  Pi,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  Comma,
  Semicolon,
  End,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;
  SourceSpan span;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Splits `text` into tokens, ending with an End token. Throws
/// Error(LexError) at the first byte that starts no token.
std::vector<Token> tokenize(std::string_view text);

enum class Function { phi, psi, f, fprod, chi, theta1, theta2, theta3, theta4, S, T };

std::string_view to_string(Function fn);

/// Expression tree. Structural equality ignores spans.
struct Expr {
  enum class Kind { Literal, SqrtFive, Add, Sub, Mul, Div, Pow, Neg, QPow, Call };

  Kind kind = Kind::Literal;
  Rational value;      ///< Literal value or QPow exponent
  long param = 0;      ///< Pow exponent, theta angle index m, or S/T index k
  Function fn = Function::phi;
  ArgSpec arg;         ///< Call argument +-q^k
  std::vector<Expr> children;
  SourceSpan span;

  static Expr literal(Rational v, SourceSpan span = {});
  static Expr sqrt5(SourceSpan span = {});
  static Expr qpow(Rational r, SourceSpan span = {});
  static Expr unary(Kind kind, Expr child, SourceSpan span = {});
  static Expr binary(Kind kind, Expr lhs, Expr rhs, SourceSpan span = {});
  static Expr pow(Expr base, long exponent, SourceSpan span = {});
  static Expr call(Function fn, ArgSpec arg, long param = 0, SourceSpan span = {});

  friend bool operator==(const Expr& a, const Expr& b);
};

/// Throws Error(ParseError) with the span of the offending token.
Expr parse(const std::vector<Token>& tokens);
Expr parse(std::string_view text);

/// Canonical fully parenthesized form; parse(print(e)) == e.
std::string print(const Expr& e);

/// Evaluates to a series exact below `order`. Errors from the series
/// engine are rethrown with the span of the node that raised them.
PSeries eval(const Expr& e, const Rational& order, Kernel kernel = Kernel::karatsuba);

/// Parses a constant expression such as "1/2 + 1/4*r5" into a K5.
K5 parse_k5(std::string_view text);

}  // namespace qseries::dsl
