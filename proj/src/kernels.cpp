#include "qseries/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qseries::kernels {

namespace {

using Vec = std::vector<mpz_class>;
using View = std::span<const mpz_class>;

// Below this many output slots the naive loop stays serial.
constexpr std::size_t kParallelThreshold = 64;
// Karatsuba spawns tasks for subproducts down to this depth.
constexpr int kTaskDepth = 3;

// Full (untruncated) schoolbook product into out[0 .. |a|+|b|-1).
void schoolbook(View a, View b, mpz_class* out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
}

// Full product of equal-length operands; result has 2n-1 slots.
Vec karatsuba(View a, View b, int depth) {
  const std::size_t n = a.size();
  Vec out(n == 0 ? 0 : 2 * n - 1);
  if (n <= kKaratsubaCutoff) {
    schoolbook(a, b, out.data());
    return out;
  }
  const std::size_t h = n / 2;
  const View a0 = a.first(h), a1 = a.subspan(h);
  const View b0 = b.first(h), b1 = b.subspan(h);
  const std::size_t m = n - h;  // >= h

  Vec sa(m), sb(m);
  for (std::size_t i = 0; i < m; ++i) {
    sa[i] = a1[i];
    sb[i] = b1[i];
    if (i < h) {
      sa[i] += a0[i];
      sb[i] += b0[i];
    }
  }
  // pad the low halves to m so all three products are square
  Vec a0p(a0.begin(), a0.end()), b0p(b0.begin(), b0.end());
  a0p.resize(m);
  b0p.resize(m);

  Vec low, high, mid;
#pragma omp task shared(low, a0p, b0p) if (depth < kTaskDepth)
  low = karatsuba(a0p, b0p, depth + 1);
#pragma omp task shared(high) if (depth < kTaskDepth)
  high = karatsuba(a1, b1, depth + 1);
  mid = karatsuba(sa, sb, depth + 1);
#pragma omp taskwait

  for (std::size_t i = 0; i < mid.size(); ++i) {
    mid[i] -= low[i];
    mid[i] -= high[i];
  }
  for (std::size_t i = 0; i < low.size() && i < out.size(); ++i) out[i] += low[i];
  for (std::size_t i = 0; i < mid.size() && i + h < out.size(); ++i) out[i + h] += mid[i];
  for (std::size_t i = 0; i < high.size() && i + 2 * h < out.size(); ++i) out[i + 2 * h] += high[i];
  return out;
}

// Common denominator of all rational and sqrt5 parts.
mpz_class common_denominator(std::span<const K5> v) {
  mpz_class d = 1;
  for (const K5& c : v) {
    if (c.rational_part().den() != 1) d = lcm(d, c.rational_part().den());
    if (c.sqrt5_part().den() != 1) d = lcm(d, c.sqrt5_part().den());
  }
  return d;
}

void lift(std::span<const K5> v, std::size_t n, const mpz_class& d, Vec& ra, Vec& rb) {
  const std::size_t len = std::min(v.size(), n);
  ra.assign(len, 0);
  rb.assign(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    const mpq_class& a = v[i].rational_part().mpq();
    const mpq_class& b = v[i].sqrt5_part().mpq();
    if (sgn(a) != 0) ra[i] = a.get_num() * (d / a.get_den());
    if (sgn(b) != 0) rb[i] = b.get_num() * (d / b.get_den());
  }
}

bool all_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return sgn(x) == 0; });
}

}  // namespace

Vec mul_naive(View a, View b, std::size_t n) {
  Vec out(n);
  const auto na = static_cast<std::ptrdiff_t>(std::min(a.size(), n));
  const auto nb = static_cast<std::ptrdiff_t>(std::min(b.size(), n));
  const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16) if (n >= kParallelThreshold)
  for (std::ptrdiff_t k = 0; k < sn; ++k) {
    mpz_class acc = 0;
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, k - nb + 1);
    const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(k, na - 1);
    for (std::ptrdiff_t i = lo; i <= hi; ++i) mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[k - i].get_mpz_t());
    out[k] = std::move(acc);
  }
  return out;
}

Vec mul_karatsuba(View a, View b, std::size_t n) {
  // Only the first n slots of each operand can reach the first n slots of
  // the product.
  const std::size_t len = std::min(n, std::max(a.size(), b.size()));
  Vec pa(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(std::min(a.size(), len)));
  Vec pb(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(std::min(b.size(), len)));
  pa.resize(len);
  pb.resize(len);
  Vec full;
#pragma omp parallel if (len > kKaratsubaCutoff)
#pragma omp single
  full = karatsuba(pa, pb, 0);
  full.resize(n);
  return full;
}

std::vector<K5> mul_reference(std::span<const K5> a, std::span<const K5> b, std::size_t n) {
  std::vector<K5> out(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<K5> mul_k5(std::span<const K5> a, std::span<const K5> b, std::size_t n, Kernel kernel) {
  const mpz_class da = common_denominator(a.first(std::min(a.size(), n)));
  const mpz_class db = common_denominator(b.first(std::min(b.size(), n)));
  Vec aa, ab, ba, bb;
  lift(a, n, da, aa, ab);
  lift(b, n, db, ba, bb);

  const auto mul = [&](const Vec& x, const Vec& y) -> Vec {
    if (all_zero(x) || all_zero(y)) return Vec(n);
    return kernel == Kernel::naive ? mul_naive(x, y, n) : mul_karatsuba(x, y, n);
  };
  // (A + B r5)(C + D r5) = (AC + 5 BD) + (AD + BC) r5
  const Vec ac = mul(aa, ba);
  const Vec bd = mul(ab, bb);
  const Vec ad = mul(aa, bb);
  const Vec bc = mul(ab, ba);

  const mpz_class den = da * db;
  std::vector<K5> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    mpz_class ra = ac[k] + 5 * bd[k];
    mpz_class rb = ad[k] + bc[k];
    out[k] = K5(Rational(ra, den), Rational(rb, den));
  }
  return out;
}

}  // namespace qseries::kernels
