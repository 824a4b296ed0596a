#include "qseries/special.hpp"

#include <numeric>
#include <string>

#include "qseries/error.hpp"

namespace qseries {

namespace {

long den_of(const Rational& r) { return r.den().get_si(); }

// Zero series on the integer grid refined to the order's denominator.
PSeries zero_series(const Rational& order, long min_den = 1) {
  return PSeries(std::lcm(den_of(order), min_den), order);
}

// Adds c at q^(num/den) when below the order; returns false once past it.
bool add_term(PSeries& s, long num, long den, const K5& c) {
  const Rational e(num, den);
  if (e >= s.order()) return false;
  const std::size_t slot = static_cast<std::size_t>(num * (s.exp_den() / den));
  s.add_to_slot(slot, c);
  return true;
}

K5 sign_pow(bool negative, long e) { return negative && (e % 2 != 0) ? K5(-1) : K5(1); }

void check_arg(ArgSpec arg) {
  if (arg.power < 1) throw Error(ErrorKind::InvalidArgument, "argument power must be >= 1");
}

void check_order(const Rational& order) {
  if (order.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "order must be positive");
}

// Rational(e) < order without allocating for the common integer case.
bool below(long e, const Rational& order) { return Rational(e) < order; }

}  // namespace

PSeries build_phi(ArgSpec arg, const Rational& order) {
  check_arg(arg);
  check_order(order);
  PSeries s = zero_series(order);
  add_term(s, 0, 1, 1);
  for (long n = 1; add_term(s, arg.power * n * n, 1, sign_pow(arg.negative, n) * K5(2)); ++n) {
  }
  return s;
}

PSeries build_psi(ArgSpec arg, const Rational& order) {
  check_arg(arg);
  check_order(order);
  PSeries s = zero_series(order);
  for (long n = 0;; ++n) {
    const long t = n * (n + 1) / 2;
    if (!add_term(s, arg.power * t, 1, sign_pow(arg.negative, t))) break;
  }
  return s;
}

PSeries build_f_sum(ArgSpec arg, const Rational& order) {
  check_arg(arg);
  check_order(order);
  // f(x) = sum_n (-1)^n (-x)^(n(3n-1)/2), x = +-q^k, so -x = -+q^k.
  PSeries s = zero_series(order);
  const bool neg_inner = !arg.negative;
  add_term(s, 0, 1, 1);
  for (long n = 1;; ++n) {
    bool any = false;
    for (const long m : {n, -n}) {
      const long e = m * (3 * m - 1) / 2;
      any = add_term(s, arg.power * e, 1, sign_pow(true, m) * sign_pow(neg_inner, e)) || any;
    }
    if (!any) break;
  }
  return s;
}

PSeries build_f_product(ArgSpec arg, const Rational& order) {
  check_arg(arg);
  check_order(order);
  // f(x) = prod_{n>=1} (1 - (-x)^n)
  PSeries s = PSeries::constant(1, order);
  const bool neg_inner = !arg.negative;
  for (long n = 1; below(arg.power * n, order); ++n) {
    const SparseTerm factor[] = {{Rational(0), K5(1)}, {Rational(arg.power * n), -sign_pow(neg_inner, n)}};
    s = ps_mul_sparse(s, factor);
  }
  return s;
}

PSeries build_chi(ArgSpec arg, const Rational& order) {
  check_arg(arg);
  check_order(order);
  PSeries s = PSeries::constant(1, order);
  for (long n = 0; below(arg.power * (2 * n + 1), order); ++n) {
    const SparseTerm factor[] = {{Rational(0), K5(1)}, {Rational(arg.power * (2 * n + 1)), sign_pow(arg.negative, 1)}};
    s = ps_mul_sparse(s, factor);
  }
  return s;
}

namespace {

void require_positive_nome(int j, ArgSpec arg) {
  if (arg.negative)
    throw Error(ErrorKind::NotRepresentable,
                "theta" + std::to_string(j) + " at a negative nome needs (-1)^(1/4)");
}

// The trig values a theta series draws on repeat with period 20 in the
// summation index, so checking one period settles representability.
void check_theta_angle(int j, AngleTenths z) {
  for (long n = 0; n < 20; ++n) {
    if (j == 1) sin_tenths((2 * n + 1) * z.m);
    if (j == 2) cos_tenths((2 * n + 1) * z.m);
  }
}

}  // namespace

PSeries build_theta_sum(int j, AngleTenths z, ArgSpec arg, const Rational& order) {
  check_arg(arg);
  check_order(order);
  if (j < 1 || j > 4) throw Error(ErrorKind::InvalidArgument, "theta index must be 1..4");
  check_theta_angle(j, z);
  const long k = arg.power;
  if (j == 1 || j == 2) {
    require_positive_nome(j, arg);
    // x^((n+1/2)^2) = q^(k(4n^2+4n+1)/4)
    PSeries s = zero_series(order, 4);
    for (long n = 0;; ++n) {
      const long num = k * (4 * n * n + 4 * n + 1);
      K5 c = j == 1 ? sign_pow(true, n) * sin_tenths((2 * n + 1) * z.m) : cos_tenths((2 * n + 1) * z.m);
      if (!add_term(s, num, 4, c * K5(2))) break;
    }
    return s;
  }
  PSeries s = zero_series(order);
  add_term(s, 0, 1, 1);
  for (long n = 1;; ++n) {
    // theta3: x^(n^2) cos(2nz); theta4 adds (-1)^n. x^(n^2) has sign s^n.
    K5 c = sign_pow(arg.negative, n) * cos_fifths(n * z.m) * K5(2);
    if (j == 4) c = sign_pow(true, n) * c;
    if (!add_term(s, k * n * n, 1, c)) break;
  }
  return s;
}

PSeries build_theta_product(int j, AngleTenths z, ArgSpec arg, const Rational& order) {
  check_arg(arg);
  check_order(order);
  if (j != 1 && j != 3) throw Error(ErrorKind::InvalidArgument, "product form exists for theta1 and theta3 only");
  const long k = arg.power;
  const K5 cos2z = cos_fifths(z.m);
  const K5 two_cos2z = K5(2) * cos2z;
  if (j == 1) {
    require_positive_nome(1, arg);
    const K5 sin_z = sin_tenths(z.m);
    // 2 x^(1/4) sin z prod (1 - x^2n)(1 - 2 x^2n cos 2z + x^4n)
    PSeries p = PSeries::constant(1, order);
    for (long n = 1; below(2 * k * n, order); ++n) {
      const SparseTerm a[] = {{Rational(0), K5(1)}, {Rational(2 * k * n), K5(-1)}};
      const SparseTerm b[] = {{Rational(0), K5(1)}, {Rational(2 * k * n), -two_cos2z}, {Rational(4 * k * n), K5(1)}};
      p = ps_mul_sparse(ps_mul_sparse(p, a), b);
    }
    p *= K5(2) * sin_z;
    return ps_shift(p, Rational(k, 4)).truncated(order);
  }
  // prod (1 - x^2n)(1 + 2 x^(2n-1) cos 2z + x^(4n-2))
  const K5 odd_sign = sign_pow(arg.negative, 1);
  PSeries p = PSeries::constant(1, order);
  for (long n = 1; below(k * (2 * n - 1), order); ++n) {
    const SparseTerm a[] = {{Rational(0), K5(1)}, {Rational(2 * k * n), K5(-1)}};
    const SparseTerm b[] = {
        {Rational(0), K5(1)}, {Rational(k * (2 * n - 1)), odd_sign * two_cos2z}, {Rational(k * (4 * n - 2)), K5(1)}};
    p = ps_mul_sparse(ps_mul_sparse(p, a), b);
  }
  return p;
}

PSeries build_denominator_sum(long k, SumVariant variant, ArgSpec arg, const Rational& order) {
  check_arg(arg);
  check_order(order);
  if (k % 2 == 0)
    throw Error(ErrorKind::NotRepresentable, "denominator sum needs an odd index, got " + std::to_string(k));
  // (-x)^t with x = +-q^p is (-+1)^t q^(pt)
  const bool neg_inner = !arg.negative;
  PSeries s = zero_series(order);
  for (long n = 0;; ++n) {
    const long t = n * (n + 1) / 2;
    K5 c = sign_pow(neg_inner, t) * sin_tenths((2 * n + 1) * k);
    if (variant == SumVariant::signed_) c = sign_pow(true, n) * c;
    if (!add_term(s, arg.power * t, 1, c)) break;
  }
  return s;
}

PSeries build_fact_denominator(FactVariant variant, const Rational& order) {
  check_order(order);
  const K5 odd_mid = variant == FactVariant::f1 ? K5::alpha() : K5::beta();
  const K5 even_mid = variant == FactVariant::f1 ? -K5::beta() : -K5::alpha();
  PSeries s = PSeries::constant(1, order);
  for (long n = 1; below(n, order); ++n) {
    const SparseTerm factor[] = {
        {Rational(0), K5(1)}, {Rational(n), n % 2 == 1 ? odd_mid : even_mid}, {Rational(2 * n), K5(1)}};
    s = ps_mul_sparse(s, factor);
  }
  return s;
}

}  // namespace qseries
