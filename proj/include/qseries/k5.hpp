#pragma once

#include <iosfwd>
#include <string>

#include "qseries/rational.hpp"

namespace qseries {

/// An element a + b*sqrt(5) of the golden-ratio field Q(sqrt 5).
class K5 {
 public:
  K5() = default;
  K5(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  K5(int a) : a_(a) {}                  // NOLINT(google-explicit-constructor)
  K5(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static K5 sqrt5() { return {0, 1}; }
  /// (1 - sqrt5)/2
  static K5 alpha() { return {Rational(1, 2), Rational(-1, 2)}; }
  /// (1 + sqrt5)/2, the golden ratio.
  static K5 beta() { return {Rational(1, 2), Rational(1, 2)}; }

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& sqrt5_part() const noexcept { return b_; }

  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const noexcept { return b_.is_zero(); }

  /// a^2 - 5 b^2; zero iff the element is zero.
  Rational norm() const { return a_ * a_ - Rational(5) * b_ * b_; }
  K5 conjugate() const { return {a_, -b_}; }
  /// Throws Error(DivisionByZero) on zero.
  K5 inverse() const;

  /// Nearest long double of a + b*sqrt(5).
  long double embed() const;

  /// "a/b" when rational, "a/b + c/d*r5" otherwise (integers print bare).
  std::string str() const;

  K5 operator-() const { return {-a_, -b_}; }
  K5& operator+=(const K5& o) { a_ += o.a_; b_ += o.b_; return *this; }
  K5& operator-=(const K5& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  K5& operator*=(const K5& o);
  K5& operator/=(const K5& o) { return *this *= o.inverse(); }

  friend K5 operator+(K5 x, const K5& y) { return x += y; }
  friend K5 operator-(K5 x, const K5& y) { return x -= y; }
  friend K5 operator*(K5 x, const K5& y) { return x *= y; }
  friend K5 operator/(K5 x, const K5& y) { return x /= y; }
  friend bool operator==(const K5&, const K5&) = default;

 private:
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const K5& x);

/// sin(k*pi/10). Defined for odd k and for k divisible by 5; any other k
/// throws Error(NotRepresentable) since sin(pi/5) is not in Q(sqrt 5).
K5 sin_tenths(long k);

/// cos(k*pi/10), via sin((5-k)*pi/10). Same representability rule as
/// sin_tenths applied to 5-k: k even or k = 5 (mod 10).
K5 cos_tenths(long k);

/// cos(n*pi/5); total.
K5 cos_fifths(long n);

}  // namespace qseries
