#include "doctest.h"
#include "generators.hpp"
#include "qseries/error.hpp"
#include "qseries/series.hpp"
#include "qseries/special.hpp"

using namespace qseries;

namespace {

// Integer-exponent series with the given leading coefficients.
PSeries poly(std::initializer_list<long> coeffs, long order) {
  PSeries s(1, Rational(order));
  std::size_t j = 0;
  for (const long c : coeffs) {
    if (j < s.slots()) s.set_slot(j, K5(Rational(c)));
    ++j;
  }
  return s;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("construction and accessors") {
  const PSeries s(4, Rational(3));
  CHECK(s.slots() == 12);
  CHECK(s.is_zero());
  CHECK_THROWS_AS(PSeries(2, Rational(1, 3)), Error);
  CHECK_THROWS_AS(PSeries(1, Rational(0)), Error);
  const PSeries m = PSeries::monomial(K5(3), Rational(1, 2), Rational(2));
  CHECK(m.exp_den() == 2);
  CHECK(m.coeff(Rational(1, 2)) == K5(3));
  CHECK(m.coeff(Rational(1, 3)) == K5());
  CHECK(kind_of([&] { (void)m.coeff(Rational(2)); }) == ErrorKind::OrderTooSmall);
  CHECK(*m.valuation() == Rational(1, 2));
}

TEST_CASE("ps_add") {
  CHECK(ps_add(poly({1, 1}, 4), poly({1, -1}, 4)) == poly({2}, 4));
  const PSeries x = poly({3, 0, 5, 7}, 4);
  CHECK(ps_add(x, PSeries(1, Rational(4))) == x);
  const PSeries phi = build_phi(ArgSpec::q(), Rational(30));
  CHECK(ps_sub(phi, phi).is_zero());
  // order is the minimum of the operand orders
  CHECK(ps_add(poly({1}, 3), poly({1}, 7)).order() == Rational(3));
}

TEST_CASE("ps_mul") {
  for (const Kernel k : {Kernel::naive, Kernel::karatsuba}) {
    CHECK(ps_mul(poly({1, 1}, 5), poly({1, -1}, 5), k) == poly({1, 0, -1}, 5));
    // brute-force convolution of (1 + 2q + 2q^4) with itself: 1 + 4q + 4q^2 + 0q^3 + 4q^4
    const PSeries phi = build_phi(ArgSpec::q(), Rational(5));
    CHECK(ps_mul(phi, phi, k) == poly({1, 4, 4, 0, 4}, 5));
  }
}

TEST_CASE("ps_mul aligns exponent grids") {
  const PSeries half = PSeries::monomial(K5(1), Rational(1, 2), Rational(3));
  const PSeries quarter = PSeries::monomial(K5(2), Rational(1, 4), Rational(3));
  const PSeries p = ps_mul(half, quarter);
  CHECK(p.exp_den() == 4);
  CHECK(p.coeff(Rational(3, 4)) == K5(2));
  CHECK(*p.valuation() == Rational(3, 4));
}

TEST_CASE("ps_inv") {
  CHECK(ps_inv(poly({1, -1}, 8)) == poly({1, 1, 1, 1, 1, 1, 1, 1}, 8));
  // long division against chi(q) = 1 + q + q^3 + q^4 + ...: 1 - q + q^2 - 2q^3 + ...
  const PSeries inv_chi = ps_inv(build_chi(ArgSpec::q(), Rational(4)));
  CHECK(inv_chi == poly({1, -1, 1, -2}, 4));
  CHECK(kind_of([] { ps_inv(poly({0, 1, 1}, 5)); }) == ErrorKind::NotInvertible);
}

TEST_CASE("ps_pow") {
  CHECK(ps_pow(poly({1, 1}, 5), 2) == poly({1, 2, 1}, 5));
  CHECK(ps_pow(build_f_sum(ArgSpec::neg(2), Rational(20)), 4).slot(0) == K5(1));
  CHECK_THROWS_AS(ps_pow(poly({1}, 2), 0), Error);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const PSeries x = testing::random_series(rng, 2, 12);
    CHECK(ps_pow(x, 2) == ps_mul(x, x));
    CHECK(ps_pow(x, 5) == ps_mul(ps_mul(ps_mul(x, x), ps_mul(x, x)), x));
  }
}

TEST_CASE("ps_subst_qk") {
  const PSeries s = ps_subst_qk(poly({1, 1}, 2), 5);
  CHECK(s.order() == Rational(10));
  CHECK(s.coeff(Rational(5)) == K5(1));
  CHECK(s.coeff(Rational(0)) == K5(1));
  CHECK(ps_subst_qk(build_phi(ArgSpec::q(), Rational(5)), 5) == build_phi(ArgSpec::pos(5), Rational(25)));
  // f(-q) -> f(-q^2): exponents n(3n-1)
  CHECK(ps_subst_qk(build_f_sum(ArgSpec::neg(1), Rational(40)), 2) == build_f_sum(ArgSpec::neg(2), Rational(80)));
}

TEST_CASE("ps_subst_negq") {
  CHECK(ps_subst_negq(poly({1, 1}, 3)) == poly({1, -1}, 3));
  CHECK(ps_subst_negq(build_phi(ArgSpec::q(), Rational(30))) == build_phi(ArgSpec::neg(1), Rational(30)));
  const PSeries root = PSeries::monomial(K5(1), Rational(1, 2), Rational(2));
  CHECK(kind_of([&] { ps_subst_negq(root); }) == ErrorKind::FractionalExponent);
  // zero coefficients on the fractional grid are fine
  CHECK(ps_subst_negq(poly({1, 1}, 3).aligned(4)) == poly({1, -1}, 3));
}

TEST_CASE("ps_shift") {
  const PSeries one = PSeries::constant(1, Rational(3));
  const PSeries h = ps_shift(one, Rational(1, 2));
  CHECK(h.order() == Rational(7, 2));
  CHECK(h.coeff(Rational(1, 2)) == K5(1));
  const PSeries quarter = ps_shift(one, Rational(1, 4));
  CHECK(ps_mul(quarter, quarter).truncated(Rational(3)) == h.truncated(Rational(3)));
  CHECK(ps_shift(poly({1, 2, 3}, 4), Rational(0)) == poly({1, 2, 3}, 4));
  CHECK(ps_unshift(h, Rational(1, 2)) == one.aligned(2));
  CHECK_THROWS_AS(ps_unshift(one, Rational(1, 2)), Error);
}

TEST_CASE("ps_cmp") {
  CHECK(ps_cmp(poly({1, 1}, 4), poly({1, 1, 0, 1}, 4), Rational(3)).equal());
  const CmpResult r = ps_cmp(poly({1, 1}, 4), poly({1, -1}, 4), Rational(2));
  REQUIRE_FALSE(r.equal());
  CHECK(r.mismatch->exp == Rational(1));
  CHECK(r.mismatch->lhs == K5(1));
  CHECK(r.mismatch->rhs == K5(-1));
  CHECK(ps_cmp(build_f_sum(ArgSpec::neg(1), Rational(100)), build_f_product(ArgSpec::neg(1), Rational(100)),
               Rational(100))
            .equal());
  CHECK(kind_of([] { ps_cmp(poly({1}, 3), poly({1}, 5), Rational(4)); }) == ErrorKind::OrderTooSmall);
}

TEST_CASE("property: ring axioms at truncation") {
  std::mt19937_64 rng(64);
  for (int i = 0; i < 10; ++i) {
    const PSeries x = testing::random_series(rng, 1, 64);
    const PSeries y = testing::random_series(rng, 2, 64);
    const PSeries z = testing::random_series(rng, 4, 64);
    CHECK(ps_add(ps_add(x, y), z) == ps_add(x, ps_add(y, z)));
    CHECK(ps_mul(x, ps_add(y, z)) == ps_add(ps_mul(x, y), ps_mul(x, z)));
    CHECK(ps_mul(x, y) == ps_mul(y, x));
  }
}

TEST_CASE("property: x * inv(x) = 1 below the order") {
  std::mt19937_64 rng(100);
  for (int i = 0; i < 100; ++i) {
    const long order = 1 + static_cast<long>(rng() % 40);
    const long d = (i % 3 == 0) ? 2 : 1;
    const PSeries x = testing::random_series(rng, d, order, true);
    const PSeries one = PSeries::constant(1, Rational(order));
    REQUIRE(ps_cmp(ps_mul(x, ps_inv(x)), one, Rational(order)).equal());
  }
}

TEST_CASE("property: alignment never changes a comparison verdict") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const PSeries x = testing::random_series(rng, 2, 10);
    PSeries y = x;
    if (i % 2) {
      const std::size_t j = rng() % y.slots();
      y.set_slot(j, y.slot(j) + testing::random_nonzero_k5(rng));
    }
    const CmpResult plain = ps_cmp(x, y, Rational(10));
    const CmpResult fine = ps_cmp(x.aligned(8), y.aligned(6), Rational(10));
    CHECK(plain.equal() == fine.equal());
    if (!plain.equal()) {
      CHECK(plain.mismatch->exp == fine.mismatch->exp);
      CHECK(plain.mismatch->lhs == fine.mismatch->lhs);
    }
  }
}

TEST_CASE("ps_evaluate") {
  const PSeries s = ps_shift(poly({1, 1}, 4), Rational(1, 2));
  CHECK(static_cast<double>(ps_evaluate(s, 0.25L)) == doctest::Approx(0.5 * 1.25));
}
