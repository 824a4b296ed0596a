#pragma once

#include <complex>

#include "qseries/special.hpp"

namespace qseries::numeric {

/// Working type of the numeric backend: x86-64 long double carries a
/// 64-bit mantissa (about 19 significant digits).
using ComplexValue = std::complex<long double>;

inline constexpr long double kPi = 3.141592653589793238462643383279502884L;

/// p^e with the principal logarithm; 0^e = 0 for e > 0.
ComplexValue principal_pow(ComplexValue p, long double e);
/// i^e = exp(i pi e / 2).
ComplexValue i_pow(long double e);

/// theta_j(z, nome) summed over `terms` terms of its Fourier series, with
/// nome^(n+1/2)^2 and nome^(n^2) taken on the principal branch.
ComplexValue theta(int j, long double z, ComplexValue nome, int terms);

/// Magnitude of the last included term of theta_j's series; used as a
/// convergence witness.
long double theta_tail(int j, long double z, ComplexValue nome, int terms);

// Partial sums / products of the named functions at a numeric argument x.
// `terms` bounds the summation index (or number of product factors).
ComplexValue phi(ComplexValue x, int terms);
ComplexValue psi(ComplexValue x, int terms);
ComplexValue f_sum(ComplexValue x, int terms);
ComplexValue f_product(ComplexValue x, int terms);
ComplexValue chi(ComplexValue x, int terms);
ComplexValue denominator_sum(long k, SumVariant variant, ComplexValue x, int terms);
ComplexValue fact_denominator(FactVariant variant, ComplexValue x, int terms);

/// Both sides of chi(q^5) = phi(q) f(q) / (4 S_3 S_1) at a real q.
struct MainIdentitySides {
  long double lhs;
  long double rhs;
};
MainIdentitySides main_identity(long double q, SumVariant variant, int terms);

}  // namespace qseries::numeric
