#pragma once

#include "qseries/kernels.hpp"
#include "qseries/rational.hpp"
#include "qseries/series.hpp"

namespace qseries {

/// The argument +-q^power of a named function.
struct ArgSpec {
  bool negative = false;
  long power = 1;

  static ArgSpec q() { return {}; }
  static ArgSpec pos(long power) { return {false, power}; }
  static ArgSpec neg(long power) { return {true, power}; }

  friend bool operator==(const ArgSpec&, const ArgSpec&) = default;
};

/// The angle z = m*pi/10.
struct AngleTenths {
  long m = 0;
  friend bool operator==(const AngleTenths&, const AngleTenths&) = default;
};

enum class SumVariant { literal, signed_ };
enum class FactVariant { f1, f2 };

/// phi(x) = sum_{n in Z} x^(n^2)
PSeries build_phi(ArgSpec arg, const Rational& order);
/// psi(x) = sum_{n>=0} x^(n(n+1)/2)
PSeries build_psi(ArgSpec arg, const Rational& order);
/// f(x) through the pentagonal bilateral sum; f(-q) = sum (-1)^n q^(n(3n-1)/2).
PSeries build_f_sum(ArgSpec arg, const Rational& order);
/// f(x) through the product; f(-q) = prod_{n>=1} (1 - q^n).
PSeries build_f_product(ArgSpec arg, const Rational& order);
/// chi(x) = prod_{n>=0} (1 + x^(2n+1))
PSeries build_chi(ArgSpec arg, const Rational& order);

/// Jacobi theta_j(z, x), j in 1..4, from the defining Fourier sums.
/// theta_1 and theta_2 carry x^(1/4) and are placed on the grid q^(1/4);
/// they need a positive argument. Throws NotRepresentable when a sine or
/// cosine value leaves Q(sqrt 5).
PSeries build_theta_sum(int j, AngleTenths z, ArgSpec arg, const Rational& order);

/// theta_1 or theta_3 from the infinite product (Fourier product) expansion.
PSeries build_theta_product(int j, AngleTenths z, ArgSpec arg, const Rational& order);

/// sum_{n>=0} s_n (-x)^(n(n+1)/2) sin((2n+1) k pi/10), where s_n = 1 for the
/// literal variant and (-1)^n for the signed one. k must be odd.
PSeries build_denominator_sum(long k, SumVariant variant, ArgSpec arg, const Rational& order);

/// f1: prod_{n odd} (1 + alpha q^n + q^2n) prod_{n even} (1 - beta q^n + q^2n)
/// f2: alpha and beta swapped.
PSeries build_fact_denominator(FactVariant variant, const Rational& order);

}  // namespace qseries
