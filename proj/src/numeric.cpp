#include "qseries/numeric.hpp"

#include <cmath>

#include "qseries/error.hpp"

namespace qseries::numeric {

namespace {

ComplexValue int_pow(ComplexValue x, long e) {
  ComplexValue result = 1;
  while (e > 0) {
    if (e & 1) result *= x;
    x *= x;
    e >>= 1;
  }
  return result;
}

long double sign(long n) { return n % 2 == 0 ? 1.0L : -1.0L; }

long double sin_tenths_real(long k) { return std::sin(static_cast<long double>(k) * kPi / 10.0L); }

// Term n of theta_j without the leading factor 2 (or the constant 1).
ComplexValue theta_term(int j, long double z, ComplexValue nome, long n) {
  const long double nd = static_cast<long double>(n);
  switch (j) {
    case 1: return sign(n) * principal_pow(nome, (nd + 0.5L) * (nd + 0.5L)) * std::sin((2 * nd + 1) * z);
    case 2: return principal_pow(nome, (nd + 0.5L) * (nd + 0.5L)) * std::cos((2 * nd + 1) * z);
    case 3: return principal_pow(nome, nd * nd) * std::cos(2 * nd * z);
    case 4: return sign(n) * principal_pow(nome, nd * nd) * std::cos(2 * nd * z);
    default: throw Error(ErrorKind::InvalidArgument, "theta index must be 1..4");
  }
}

}  // namespace

ComplexValue principal_pow(ComplexValue p, long double e) {
  if (p == ComplexValue(0)) return 0;
  return std::exp(e * std::log(p));
}

ComplexValue i_pow(long double e) { return std::polar(1.0L, kPi / 2.0L * e); }

ComplexValue theta(int j, long double z, ComplexValue nome, int terms) {
  ComplexValue sum = 0;
  if (j == 1 || j == 2) {
    for (long n = 0; n < terms; ++n) sum += theta_term(j, z, nome, n);
    return 2.0L * sum;
  }
  for (long n = 1; n <= terms; ++n) sum += theta_term(j, z, nome, n);
  return 1.0L + 2.0L * sum;
}

long double theta_tail(int j, long double z, ComplexValue nome, int terms) {
  const long last = (j == 1 || j == 2) ? terms - 1 : terms;
  return 2.0L * std::abs(theta_term(j, z, nome, last));
}

ComplexValue phi(ComplexValue x, int terms) {
  ComplexValue sum = 1;
  for (long n = 1; n <= terms; ++n) sum += 2.0L * int_pow(x, n * n);
  return sum;
}

ComplexValue psi(ComplexValue x, int terms) {
  ComplexValue sum = 0;
  for (long n = 0; n < terms; ++n) sum += int_pow(x, n * (n + 1) / 2);
  return sum;
}

ComplexValue f_sum(ComplexValue x, int terms) {
  ComplexValue sum = 1;
  for (long n = 1; n <= terms; ++n)
    for (const long m : {n, -n}) sum += sign(m) * int_pow(-x, m * (3 * m - 1) / 2);
  return sum;
}

ComplexValue f_product(ComplexValue x, int terms) {
  ComplexValue prod = 1;
  for (long n = 1; n <= terms; ++n) prod *= 1.0L - int_pow(-x, n);
  return prod;
}

ComplexValue chi(ComplexValue x, int terms) {
  ComplexValue prod = 1;
  for (long n = 0; n < terms; ++n) prod *= 1.0L + int_pow(x, 2 * n + 1);
  return prod;
}

ComplexValue denominator_sum(long k, SumVariant variant, ComplexValue x, int terms) {
  ComplexValue sum = 0;
  for (long n = 0; n < terms; ++n) {
    const long double s = variant == SumVariant::signed_ ? sign(n) : 1.0L;
    sum += s * int_pow(-x, n * (n + 1) / 2) * sin_tenths_real((2 * n + 1) * k);
  }
  return sum;
}

ComplexValue fact_denominator(FactVariant variant, ComplexValue x, int terms) {
  const long double root5 = std::sqrt(5.0L);
  const long double alpha = (1 - root5) / 2, beta = (1 + root5) / 2;
  const long double odd_mid = variant == FactVariant::f1 ? alpha : beta;
  const long double even_mid = variant == FactVariant::f1 ? -beta : -alpha;
  ComplexValue prod = 1;
  for (long n = 1; n <= terms; ++n) {
    const ComplexValue xn = int_pow(x, n);
    prod *= 1.0L + (n % 2 == 1 ? odd_mid : even_mid) * xn + xn * xn;
  }
  return prod;
}

MainIdentitySides main_identity(long double q, SumVariant variant, int terms) {
  const ComplexValue x = q;
  const ComplexValue lhs = chi(int_pow(x, 5), terms);
  const ComplexValue rhs =
      phi(x, terms) * f_sum(x, terms) / (4.0L * denominator_sum(3, variant, x, terms) * denominator_sum(1, variant, x, terms));
  return {lhs.real(), rhs.real()};
}

}  // namespace qseries::numeric
