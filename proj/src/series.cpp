#include "qseries/series.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "qseries/error.hpp"

namespace qseries {

namespace {

long grid_lcm(long a, long b) { return std::lcm(a, b); }

// order * D as a slot count; order must lie on the 1/D grid.
std::size_t slot_count(const Rational& order, long exp_den) {
  const Rational s = order * Rational(exp_den);
  if (!s.is_integer()) throw Error(ErrorKind::InvalidArgument, "order " + order.str() + " is not a multiple of 1/" + std::to_string(exp_den));
  if (s.sign() < 0) throw Error(ErrorKind::InvalidArgument, "negative order");
  return s.num().get_ui();
}

long den_of(const Rational& r) {
  const mpz_class d = r.den();
  if (!d.fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "exponent denominator too large");
  return d.get_si();
}

const Rational& min_order(const PSeries& x, const PSeries& y) { return x.order() < y.order() ? x.order() : y.order(); }

}  // namespace

PSeries::PSeries(long exp_den, Rational order) : exp_den_(exp_den), order_(std::move(order)) {
  if (exp_den_ < 1) throw Error(ErrorKind::InvalidArgument, "exponent denominator must be positive");
  if (order_.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "order must be positive");
  coeffs_.resize(slot_count(order_, exp_den_));
}

PSeries PSeries::constant(const K5& c, const Rational& order) {
  PSeries s(den_of(order), order);
  s.coeffs_[0] = c;
  return s;
}

PSeries PSeries::monomial(const K5& c, const Rational& exp, const Rational& order) {
  if (exp.sign() < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  const long d = grid_lcm(den_of(exp), den_of(order));
  PSeries s(d, order);
  if (exp < order) s.coeffs_[slot_count(exp, d)] = c;
  return s;
}

K5 PSeries::coeff(const Rational& e) const {
  if (e >= order_) throw Error(ErrorKind::OrderTooSmall, "exponent " + e.str() + " is not below order " + order_.str());
  if (e.sign() < 0) return {};
  const Rational s = e * Rational(exp_den_);
  if (!s.is_integer()) return {};
  return coeffs_[s.num().get_ui()];
}

PSeries PSeries::aligned(long exp_den) const {
  if (exp_den == exp_den_) return *this;
  if (exp_den % exp_den_ != 0) throw Error(ErrorKind::InvalidArgument, "alignment must refine the exponent grid");
  const long f = exp_den / exp_den_;
  PSeries out(exp_den, order_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) out.coeffs_[j * f] = coeffs_[j];
  return out;
}

PSeries PSeries::truncated(const Rational& order) const {
  if (order > order_) throw Error(ErrorKind::OrderTooSmall, "cannot extend a series beyond its order");
  const long d = grid_lcm(exp_den_, den_of(order));
  PSeries a = aligned(d);
  a.order_ = order;
  a.coeffs_.resize(slot_count(order, d));
  return a;
}

bool PSeries::is_zero() const {
  for (const K5& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

std::optional<Rational> PSeries::valuation() const {
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (!coeffs_[j].is_zero()) return exponent(j);
  return std::nullopt;
}

PSeries PSeries::operator-() const {
  PSeries out = *this;
  for (K5& c : out.coeffs_) c = -c;
  return out;
}

PSeries& PSeries::operator*=(const K5& c) {
  for (K5& x : coeffs_)
    if (!x.is_zero()) x *= c;
  return *this;
}

bool operator==(const PSeries& x, const PSeries& y) {
  if (x.order() != y.order()) return false;
  const long d = grid_lcm(x.exp_den(), y.exp_den());
  const PSeries a = x.aligned(d), b = y.aligned(d);
  return a.coeffs_ == b.coeffs_;
}

PSeries ps_add(const PSeries& x, const PSeries& y) {
  const Rational& order = min_order(x, y);
  const long d = grid_lcm(x.exp_den(), y.exp_den());
  PSeries out = x.truncated(order).aligned(d);
  const PSeries b = y.truncated(order).aligned(d);
  for (std::size_t j = 0; j < out.slots(); ++j)
    if (!b.slot(j).is_zero()) out.add_to_slot(j, b.slot(j));
  return out;
}

PSeries ps_sub(const PSeries& x, const PSeries& y) { return ps_add(x, -y); }

PSeries ps_scale(const PSeries& x, const K5& c) {
  PSeries out = x;
  out *= c;
  return out;
}

PSeries ps_mul(const PSeries& x, const PSeries& y, Kernel kernel) {
  const Rational& order = min_order(x, y);
  const long d = grid_lcm(x.exp_den(), y.exp_den());
  const PSeries a = x.truncated(order).aligned(d);
  const PSeries b = y.truncated(order).aligned(d);
  PSeries out(d, order);
  auto prod = kernels::mul_k5(a.coeffs(), b.coeffs(), out.slots(), kernel);
  for (std::size_t j = 0; j < prod.size(); ++j) out.set_slot(j, std::move(prod[j]));
  return out;
}

PSeries ps_inv(const PSeries& x, Kernel kernel) {
  if (x.slot(0).is_zero()) throw Error(ErrorKind::NotInvertible, "series has zero constant term");
  const std::size_t n = x.slots();
  std::vector<K5> y{x.slot(0).inverse()};
  // Newton: y <- y (2 - x y), doubling the number of correct slots.
  std::size_t len = 1;
  while (len < n) {
    const std::size_t next = std::min(2 * len, n);
    std::vector<K5> e = kernels::mul_k5(x.coeffs().first(next), y, next, kernel);
    for (K5& c : e) c = -c;
    e[0] += K5(2);
    y = kernels::mul_k5(y, e, next, kernel);
    len = next;
  }
  PSeries out(x.exp_den(), x.order());
  for (std::size_t j = 0; j < n; ++j) out.set_slot(j, std::move(y[j]));
  return out;
}

PSeries ps_div(const PSeries& x, const PSeries& y, Kernel kernel) { return ps_mul(x, ps_inv(y, kernel), kernel); }

PSeries ps_pow(const PSeries& x, long k, Kernel kernel) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "power must be a positive integer");
  PSeries base = x;
  std::optional<PSeries> acc;
  while (k > 0) {
    if (k & 1) acc = acc ? ps_mul(*acc, base, kernel) : base;
    k >>= 1;
    if (k > 0) base = ps_mul(base, base, kernel);
  }
  return *acc;
}

PSeries ps_subst_qk(const PSeries& x, long k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "substitution power must be positive");
  PSeries out(x.exp_den(), x.order() * Rational(k));
  for (std::size_t j = 0; j < x.slots(); ++j)
    if (!x.slot(j).is_zero()) out.set_slot(j * static_cast<std::size_t>(k), x.slot(j));
  return out;
}

PSeries ps_subst_negq(const PSeries& x) {
  PSeries out = x;
  const auto d = static_cast<std::size_t>(x.exp_den());
  for (std::size_t j = 0; j < x.slots(); ++j) {
    if (x.slot(j).is_zero()) continue;
    if (j % d != 0)
      throw Error(ErrorKind::FractionalExponent, "q -> -q with a nonzero coefficient at q^" + x.exponent(j).str());
    if ((j / d) % 2 == 1) out.set_slot(j, -x.slot(j));
  }
  return out;
}

PSeries ps_shift(const PSeries& x, const Rational& r) {
  if (r.sign() < 0) throw Error(ErrorKind::InvalidArgument, "shift must be nonnegative");
  const long d = grid_lcm(x.exp_den(), den_of(r));
  const PSeries a = x.aligned(d);
  PSeries out(d, x.order() + r);
  const std::size_t off = slot_count(r, d);
  for (std::size_t j = 0; j < a.slots(); ++j) out.set_slot(j + off, a.slot(j));
  return out;
}

PSeries ps_unshift(const PSeries& x, const Rational& r) {
  if (r.sign() < 0) throw Error(ErrorKind::InvalidArgument, "shift must be nonnegative");
  if (r >= x.order()) throw Error(ErrorKind::OrderTooSmall, "unshift by at least the order");
  const long d = grid_lcm(x.exp_den(), den_of(r));
  const PSeries a = x.aligned(d);
  const std::size_t off = slot_count(r, d);
  for (std::size_t j = 0; j < off; ++j)
    if (!a.slot(j).is_zero())
      throw Error(ErrorKind::InvalidArgument, "nonzero coefficient below q^" + r.str() + " in unshift");
  PSeries out(d, x.order() - r);
  for (std::size_t j = 0; j < out.slots(); ++j) out.set_slot(j, a.slot(j + off));
  return out;
}

PSeries ps_mul_sparse(const PSeries& x, std::span<const SparseTerm> factor) {
  long d = x.exp_den();
  for (const SparseTerm& t : factor) d = grid_lcm(d, den_of(t.exp));
  const PSeries a = x.aligned(d);
  PSeries out(d, x.order());
  for (const SparseTerm& t : factor) {
    if (t.coeff.is_zero() || t.exp >= x.order()) continue;
    const std::size_t off = slot_count(t.exp, d);
    const bool unit = t.coeff == K5(1), neg_unit = t.coeff == K5(-1);
    for (std::size_t j = 0; j + off < out.slots(); ++j) {
      const K5& c = a.slot(j);
      if (c.is_zero()) continue;
      if (unit) {
        out.add_to_slot(j + off, c);
      } else if (neg_unit) {
        out.add_to_slot(j + off, -c);
      } else {
        out.add_to_slot(j + off, c * t.coeff);
      }
    }
  }
  return out;
}

CmpResult ps_cmp(const PSeries& x, const PSeries& y, const Rational& up_to) {
  if (up_to > x.order() || up_to > y.order())
    throw Error(ErrorKind::OrderTooSmall, "comparison bound " + up_to.str() + " exceeds a series order");
  const long d = grid_lcm(x.exp_den(), y.exp_den());
  const PSeries a = x.aligned(d), b = y.aligned(d);
  for (std::size_t j = 0; j < a.slots() && a.exponent(j) < up_to; ++j)
    if (a.slot(j) != b.slot(j)) return {Mismatch{a.exponent(j), a.slot(j), b.slot(j)}};
  return {};
}

long double ps_evaluate(const PSeries& x, long double q) {
  long double sum = 0;
  for (std::size_t j = 0; j < x.slots(); ++j) {
    if (x.slot(j).is_zero()) continue;
    const long double e = static_cast<long double>(j) / static_cast<long double>(x.exp_den());
    sum += x.slot(j).embed() * std::pow(q, e);
  }
  return sum;
}

std::string to_string(const PSeries& x) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < x.slots(); ++j) {
    const K5& c = x.slot(j);
    if (c.is_zero()) continue;
    const Rational e = x.exponent(j);
    std::string coeff = c.is_rational() ? c.str() : "(" + c.str() + ")";
    if (!first) {
      if (c.is_rational() && c.rational_part().sign() < 0) {
        os << " - ";
        coeff = (-c).str();
      } else {
        os << " + ";
      }
    }
    first = false;
    if (e.is_zero()) {
      os << coeff;
      continue;
    }
    if (coeff != "1") os << (coeff == "-1" ? "-" : coeff + "*");
    os << "q";
    if (e != Rational(1)) os << "^" << (e.is_integer() ? e.str() : "(" + e.str() + ")");
  }
  if (first) os << "0";
  os << " + O(q^" << (x.order().is_integer() ? x.order().str() : "(" + x.order().str() + ")") << ")";
  return os.str();
}

}  // namespace qseries
