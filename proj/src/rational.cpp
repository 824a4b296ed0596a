#include "qseries/rational.hpp"

#include <cctype>
#include <ostream>

#include "qseries/error.hpp"

namespace qseries {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    throw Error(ErrorKind::InvalidArgument, "malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  if (negative) n = -n;
  return Rational(n, mpz_class(std::string(den), 10));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

long double Rational::to_long_double() const {
  // mpq -> double loses bits beyond 53; split into an integer part and a
  // remainder so values near unit scale keep the full extended precision.
  const mpz_class& n = v_.get_num();
  const mpz_class& d = v_.get_den();
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  long double whole = 0;
  if (q.fits_slong_p()) {
    whole = static_cast<long double>(q.get_si());
  } else {
    whole = static_cast<long double>(q.get_d());
  }
  if (r == 0) return whole;
  // r/d in (-1, 1): scale by 2^64 to extract 64 significant bits.
  mpz_class scaled = r;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 64);
  mpz_tdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), d.get_mpz_t());
  long double frac = 0;
  if (scaled.fits_slong_p()) {
    frac = static_cast<long double>(scaled.get_si());
  } else {
    // up to 64 bits of magnitude: assemble from two 32-bit halves
    mpz_class mag = abs(scaled);
    mpz_class hi = mag >> 32;
    mpz_class lo = mag - (hi << 32);
    frac = static_cast<long double>(hi.get_ui()) * 4294967296.0L + static_cast<long double>(lo.get_ui());
    if (sgn(scaled) < 0) frac = -frac;
  }
  return whole + frac / 18446744073709551616.0L;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::str_pq() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace qseries
