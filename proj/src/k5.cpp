#include "qseries/k5.hpp"

#include <ostream>

#include "qseries/error.hpp"

namespace qseries {

namespace {

constexpr long double kSqrt5 = 2.236067977499789696409173668731276235L;

long mod(long k, long m) {
  const long r = k % m;
  return r < 0 ? r + m : r;
}

// sin(pi/10) = (sqrt5 - 1)/4, sin(3pi/10) = (sqrt5 + 1)/4
K5 sin_pi_10() { return {Rational(-1, 4), Rational(1, 4)}; }
K5 sin_3pi_10() { return {Rational(1, 4), Rational(1, 4)}; }

}  // namespace

K5& K5::operator*=(const K5& o) {
  Rational a = a_ * o.a_ + Rational(5) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

K5 K5::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in Q(sqrt5)");
  const Rational n = norm();
  return {a_ / n, -b_ / n};
}

long double K5::embed() const { return a_.to_long_double() + b_.to_long_double() * kSqrt5; }

std::string K5::str() const {
  if (b_.is_zero()) return a_.str();
  std::string b_text;
  if (b_ == Rational(1)) {
    b_text = "r5";
  } else if (b_ == Rational(-1)) {
    b_text = "-r5";
  } else {
    b_text = b_.str() + "*r5";
  }
  if (a_.is_zero()) return b_text;
  if (b_.sign() < 0) return a_.str() + " - " + b_text.substr(1);
  return a_.str() + " + " + b_text;
}

std::ostream& operator<<(std::ostream& os, const K5& x) { return os << x.str(); }

K5 sin_tenths(long k) {
  // One period of sin(k pi/10) over k mod 20; sin(k pi/10) for even k not
  // divisible by 5 is sin(j pi/5), which lies outside Q(sqrt5).
  switch (mod(k, 20)) {
    case 0:
    case 10: return 0;
    case 1:
    case 9: return sin_pi_10();
    case 3:
    case 7: return sin_3pi_10();
    case 5: return 1;
    case 11:
    case 19: return -sin_pi_10();
    case 13:
    case 17: return -sin_3pi_10();
    case 15: return -1;
    default:
      throw Error(ErrorKind::NotRepresentable,
                  "sin(" + std::to_string(k) + "*pi/10) is not in Q(sqrt5)");
  }
}

K5 cos_tenths(long k) {
  try {
    return sin_tenths(5 - k);
  } catch (const Error&) {
    throw Error(ErrorKind::NotRepresentable, "cos(" + std::to_string(k) + "*pi/10) is not in Q(sqrt5)");
  }
}

K5 cos_fifths(long n) {
  const K5 c1{Rational(1, 4), Rational(1, 4)};   // cos(pi/5)
  const K5 c2{Rational(-1, 4), Rational(1, 4)};  // cos(2pi/5)
  switch (mod(n, 10)) {
    case 0: return 1;
    case 1:
    case 9: return c1;
    case 2:
    case 8: return c2;
    case 3:
    case 7: return -c2;
    case 4:
    case 6: return -c1;
    default: return -1;  // 5
  }
}

}  // namespace qseries
