#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qseries/k5.hpp"
#include "qseries/kernels.hpp"
#include "qseries/rational.hpp"

namespace qseries {

/// Truncated formal power series in q with exponents in (1/D)Z>=0 and K5
/// coefficients. Slot j holds the coefficient of q^(j/D); the series is
/// exact for every exponent strictly below order().
class PSeries {
 public:
  /// The zero series; `order` must be a positive multiple of 1/exp_den.
  PSeries(long exp_den, Rational order);

  static PSeries constant(const K5& c, const Rational& order);
  /// c * q^exp truncated at `order`.
  static PSeries monomial(const K5& c, const Rational& exp, const Rational& order);

  long exp_den() const noexcept { return exp_den_; }
  const Rational& order() const noexcept { return order_; }
  std::size_t slots() const noexcept { return coeffs_.size(); }
  std::span<const K5> coeffs() const noexcept { return coeffs_; }

  const K5& slot(std::size_t j) const { return coeffs_.at(j); }
  void set_slot(std::size_t j, K5 c) { coeffs_.at(j) = std::move(c); }
  void add_to_slot(std::size_t j, const K5& c) { coeffs_.at(j) += c; }

  /// Exponent of slot j, reduced.
  Rational exponent(std::size_t j) const { return Rational(static_cast<long>(j), exp_den_); }
  /// Coefficient of q^e; zero when e is off this series' grid. Throws
  /// OrderTooSmall when e >= order.
  K5 coeff(const Rational& e) const;

  /// Same series on a finer grid; `exp_den` must be a multiple of the current one.
  PSeries aligned(long exp_den) const;
  /// Drops every slot at or beyond `order` (which must not exceed the current order).
  PSeries truncated(const Rational& order) const;

  bool is_zero() const;
  /// Lowest exponent with a nonzero coefficient, if any.
  std::optional<Rational> valuation() const;

  PSeries operator-() const;
  PSeries& operator*=(const K5& c);

  /// Equal order and identical coefficients after grid alignment.
  friend bool operator==(const PSeries& x, const PSeries& y);

 private:
  long exp_den_;
  Rational order_;
  std::vector<K5> coeffs_;
};

PSeries ps_add(const PSeries& x, const PSeries& y);
PSeries ps_sub(const PSeries& x, const PSeries& y);
PSeries ps_mul(const PSeries& x, const PSeries& y, Kernel kernel = Kernel::karatsuba);
PSeries ps_scale(const PSeries& x, const K5& c);
/// Reciprocal by Newton iteration. Throws NotInvertible unless the q^0
/// coefficient is nonzero.
PSeries ps_inv(const PSeries& x, Kernel kernel = Kernel::karatsuba);
/// x / y = x * ps_inv(y).
PSeries ps_div(const PSeries& x, const PSeries& y, Kernel kernel = Kernel::karatsuba);
PSeries ps_pow(const PSeries& x, long k, Kernel kernel = Kernel::karatsuba);
/// q -> q^k; the order scales by k.
PSeries ps_subst_qk(const PSeries& x, long k);
/// q -> -q. Throws FractionalExponent if a nonzero coefficient sits at a
/// non-integer exponent.
PSeries ps_subst_negq(const PSeries& x);
/// Multiplication by q^r, r >= 0.
PSeries ps_shift(const PSeries& x, const Rational& r);
/// Division by q^r; every slot below r must be zero.
PSeries ps_unshift(const PSeries& x, const Rational& r);

/// One term c*q^exp of a sparse multiplier.
struct SparseTerm {
  Rational exp;
  K5 coeff;
};

/// In-place style product with a sparse polynomial (a single factor of an
/// infinite product). Cost is slots * terms.
PSeries ps_mul_sparse(const PSeries& x, std::span<const SparseTerm> factor);

struct Mismatch {
  Rational exp;
  K5 lhs;
  K5 rhs;
};

struct CmpResult {
  std::optional<Mismatch> mismatch;
  bool equal() const noexcept { return !mismatch.has_value(); }
};

/// Finds the smallest exponent below `up_to` where x and y differ. Throws
/// OrderTooSmall when up_to exceeds either order.
CmpResult ps_cmp(const PSeries& x, const PSeries& y, const Rational& up_to);

/// Sum of embed(c_j) * q^(j/D) for real q > 0 (or q = 0).
long double ps_evaluate(const PSeries& x, long double q);

/// Human-readable rendering, e.g. "1 + 2*q + 2*q^4 + O(q^5)".
std::string to_string(const PSeries& x);

}  // namespace qseries
