#include <algorithm>
#include <cmath>

#include "qseries/error.hpp"
#include "qseries/special.hpp"
#include "qseries/verify.hpp"

namespace qseries {

namespace {

using numeric::ComplexValue;
using numeric::kPi;

constexpr AngleTenths kPi10{1};
constexpr AngleTenths k3Pi10{3};

Equation eq(std::string label, PSeries lhs, PSeries rhs) {
  return {std::move(label), {std::move(lhs), std::nullopt}, {std::move(rhs), std::nullopt}};
}

Equation eq(std::string label, SeriesFraction lhs, SeriesFraction rhs) {
  return {std::move(label), std::move(lhs), std::move(rhs)};
}

// phi(q)^2 - 5 phi(q^5)^2 = -4 f(-q^2)^2 chi(q^5) / chi(q)
Equation lost_notebook(const Rational& n, Kernel k) {
  const PSeries phi = build_phi(ArgSpec::q(), n);
  const PSeries phi5 = build_phi(ArgSpec::pos(5), n);
  const PSeries f2 = build_f_sum(ArgSpec::neg(2), n);
  PSeries lhs = ps_sub(ps_mul(phi, phi, k), ps_scale(ps_mul(phi5, phi5, k), 5));
  PSeries rhs = ps_scale(ps_mul(ps_mul(f2, f2, k), build_chi(ArgSpec::pos(5), n), k), -4);
  return eq("phi^2(q) - 5 phi^2(q^5) = -4 f^2(-q^2) chi(q^5)/chi(q)", {std::move(lhs), std::nullopt},
            {std::move(rhs), build_chi(ArgSpec::q(), n)});
}

// phi(q) + sign*sqrt5 phi(q^5) = (1 + sign*sqrt5) f(-q^2) / denominator
Equation factorization(FactVariant variant, const Rational& n) {
  const K5 s = variant == FactVariant::f1 ? K5::sqrt5() : -K5::sqrt5();
  PSeries lhs = ps_add(build_phi(ArgSpec::q(), n), ps_scale(build_phi(ArgSpec::pos(5), n), s));
  PSeries num = ps_scale(build_f_sum(ArgSpec::neg(2), n), K5(1) + s);
  const char* label = variant == FactVariant::f1
                          ? "phi(q) + r5 phi(q^5) = (1 + r5) f(-q^2) / D_f1(q)"
                          : "phi(q) - r5 phi(q^5) = (1 - r5) f(-q^2) / D_f2(q)";
  return eq(label, {std::move(lhs), std::nullopt}, {std::move(num), build_fact_denominator(variant, n)});
}

// Denominator of the main identity: 4 S_3 S_1
PSeries main_denominator(SumVariant v, const Rational& n, Kernel k) {
  return ps_scale(ps_mul(build_denominator_sum(3, v, ArgSpec::q(), n), build_denominator_sum(1, v, ArgSpec::q(), n), k), 4);
}

Equation main_identity(SumVariant v, const Rational& n, Kernel k) {
  PSeries lhs = ps_mul(build_chi(ArgSpec::pos(5), n), main_denominator(v, n, k), k);
  PSeries rhs = ps_mul(build_phi(ArgSpec::q(), n), build_f_sum(ArgSpec::q(), n), k);
  return eq(v == SumVariant::literal ? "chi(q^5) 4 S_3 S_1 = phi(q) f(q)" : "chi(q^5) 4 T_3 T_1 = phi(q) f(q)",
            std::move(lhs), std::move(rhs));
}

std::vector<long double> phases(int count, long double start, long double step) {
  std::vector<long double> out;
  for (int i = 0; i < count; ++i) out.push_back(start + step * static_cast<long double>(i));
  return out;
}

// Walker: theta1(z,q^2) theta3(z,q^2) / theta1(z,iq) = i^(-1/4) sqrt(theta2(0,q^2) theta4(0,q^2)/2)
NumericSides walker(const NumericSample& s, int terms) {
  const ComplexValue q2 = s.q * s.q;
  const ComplexValue iq = ComplexValue(0, 1) * s.q;
  const ComplexValue lhs =
      numeric::theta(1, s.z, q2, terms) * numeric::theta(3, s.z, q2, terms) / numeric::theta(1, s.z, iq, terms);
  const ComplexValue rhs =
      numeric::i_pow(-0.25L) * std::sqrt(numeric::theta(2, 0, q2, terms) * numeric::theta(4, 0, q2, terms) / 2.0L);
  const long double tail = std::max({numeric::theta_tail(1, s.z, q2, terms), numeric::theta_tail(3, s.z, q2, terms),
                                     numeric::theta_tail(1, s.z, iq, terms), numeric::theta_tail(2, 0, q2, terms),
                                     numeric::theta_tail(4, 0, q2, terms)});
  return {lhs, rhs, tail};
}

// theta1(z, i sqrt q) = 2 i^(1/4) q^(1/8) sum (-1)^n (-q)^(n(n+1)/2) sin((2n+1)z)
NumericSides bridge(const NumericSample& s, int terms) {
  const ComplexValue nome = ComplexValue(0, 1) * std::sqrt(s.q);
  const ComplexValue lhs = numeric::theta(1, s.z, nome, terms);
  ComplexValue sum = 0;
  ComplexValue last = 0;
  for (long n = 0; n < terms; ++n) {
    ComplexValue power = 1;
    for (long t = 0; t < n * (n + 1) / 2; ++t) power *= -s.q;
    last = (n % 2 == 0 ? 1.0L : -1.0L) * power * std::sin(static_cast<long double>(2 * n + 1) * s.z);
    sum += last;
  }
  const ComplexValue rhs = 2.0L * numeric::i_pow(0.25L) * numeric::principal_pow(s.q, 0.125L) * sum;
  const long double tail = std::max(numeric::theta_tail(1, s.z, nome, terms), 2.0L * std::abs(last));
  return {lhs, rhs, tail};
}

std::vector<IdentityRecord> make_registry() {
  std::vector<IdentityRecord> r;
  const auto exact = [&](std::string id, std::string description, std::string citation, ExactBuilder b,
                         ExpectedVerdict expected = {}) {
    IdentityRecord rec;
    rec.id = std::move(id);
    rec.description = std::move(description);
    rec.citation = std::move(citation);
    rec.backend = Backend::exact;
    rec.exact = std::move(b);
    rec.expected = std::move(expected);
    r.push_back(std::move(rec));
  };
  const auto numeric_record = [&](std::string id, std::string description, std::string citation, NumericEvaluator e,
                                  std::vector<long double> grid_phases) {
    IdentityRecord rec;
    rec.id = std::move(id);
    rec.description = std::move(description);
    rec.citation = std::move(citation);
    rec.backend = Backend::numeric;
    rec.numeric = std::move(e);
    rec.default_grid = [grid_phases] { return make_grid(default_radii(), grid_phases, default_angles()); };
    r.push_back(std::move(rec));
  };

  exact("I1", "f(x) as pentagonal sum equals prod (1 - (-x)^n), at x = -q and x = q",
        "Euler's pentagonal number theorem; f(-q) := sum (-1)^n q^(n(3n-1)/2) = prod (1 - q^n)",
        [](const Rational& n, Kernel) {
          std::vector<Equation> out;
          out.push_back(eq("f(-q)", build_f_sum(ArgSpec::neg(1), n), build_f_product(ArgSpec::neg(1), n)));
          out.push_back(eq("f(q)", build_f_sum(ArgSpec::q(), n), build_f_product(ArgSpec::q(), n)));
          return out;
        });
  exact("I2", "theta1 Fourier sum equals its product expansion at z = pi/10, 3pi/10",
        "Watson, Fourier product expansion of theta1 (Whittaker & Watson p. 469)",
        [](const Rational& n, Kernel) {
          std::vector<Equation> out;
          for (const AngleTenths z : {kPi10, k3Pi10})
            out.push_back(eq("theta1(" + std::to_string(z.m) + "pi/10, q)", build_theta_sum(1, z, ArgSpec::q(), n),
                             build_theta_product(1, z, ArgSpec::q(), n)));
          return out;
        });
  exact("I3", "theta3 Fourier sum equals its product expansion at z = pi/10, 3pi/10",
        "Watson, Fourier product expansion of theta3 (Whittaker & Watson p. 469)",
        [](const Rational& n, Kernel) {
          std::vector<Equation> out;
          for (const AngleTenths z : {kPi10, k3Pi10})
            out.push_back(eq("theta3(" + std::to_string(z.m) + "pi/10, q)", build_theta_sum(3, z, ArgSpec::q(), n),
                             build_theta_product(3, z, ArgSpec::q(), n)));
          return out;
        });
  exact("I4", "phi^2(q) - 5 phi^2(q^5) = -4 f^2(-q^2) chi(q^5)/chi(q)",
        "Ramanujan's lost notebook (Andrews-Berndt Part I, p. 27, Thm 1.6.1 (ii))",
        [](const Rational& n, Kernel k) { return std::vector<Equation>{lost_notebook(n, k)}; });
  exact("I5", "phi(q) + r5 phi(q^5) = (1 + r5) f(-q^2) / [prod_odd (1 + alpha q^n + q^2n) prod_even (1 - beta q^n + q^2n)]",
        "Ramanujan's lost notebook (Andrews-Berndt Part I, p. 29, Entry 1.7.2 (i))",
        [](const Rational& n, Kernel) { return std::vector<Equation>{factorization(FactVariant::f1, n)}; });
  exact("I6", "phi(q) - r5 phi(q^5) = (1 - r5) f(-q^2) / [prod_odd (1 + beta q^n + q^2n) prod_even (1 - alpha q^n + q^2n)]",
        "Ramanujan's lost notebook (Andrews-Berndt Part I, p. 30, Entry 1.7.2 (ii))",
        [](const Rational& n, Kernel) { return std::vector<Equation>{factorization(FactVariant::f2, n)}; });
  exact("I7", "the product of the two factorizations (I5 x I6) reproduces I4 side by side",
        "Product of Entry 1.7.2 (i) and (ii) against Thm 1.6.1 (ii)",
        [](const Rational& n, Kernel k) {
          const Equation i4 = lost_notebook(n, k);
          Equation i5 = factorization(FactVariant::f1, n);
          Equation i6 = factorization(FactVariant::f2, n);
          std::vector<Equation> out;
          out.push_back(eq("lhs: (phi + r5 phi5)(phi - r5 phi5) = phi^2 - 5 phi5^2",
                           ps_mul(i5.lhs.num, i6.lhs.num, k), i4.lhs.num));
          out.push_back(eq("rhs: (1+r5)(1-r5) f^2 / (D_f1 D_f2) = -4 f^2 chi(q^5)/chi(q)",
                           SeriesFraction{ps_mul(i5.rhs.num, i6.rhs.num, k), ps_mul(*i5.rhs.den, *i6.rhs.den, k)},
                           i4.rhs));
          return out;
        });
  {
    exact("I8",
          "chi(q^5)/chi(q) = q^(1/2) f^4(-q^2) / (theta1(pi/10) theta3(pi/10) theta1(3pi/10) theta3(3pi/10))",
          "Ratio obtained by multiplying Entry 1.7.2 (i),(ii) with Watson's product expansions of theta1, theta3",
          [](const Rational& n, Kernel k) {
            const auto t = [&](int j, AngleTenths z) { return build_theta_product(j, z, ArgSpec::q(), n); };
            PSeries thetas = ps_mul(ps_mul(t(1, kPi10), t(3, kPi10), k), ps_mul(t(1, k3Pi10), t(3, k3Pi10), k), k);
            PSeries f4 = ps_shift(ps_pow(build_f_product(ArgSpec::neg(2), n), 4, k), Rational(1, 2));
            return std::vector<Equation>{eq("chi(q^5)/chi(q) = q^(1/2) f^4(-q^2) / theta-product",
                                            SeriesFraction{build_chi(ArgSpec::pos(5), n), build_chi(ArgSpec::q(), n)},
                                            SeriesFraction{std::move(f4), std::move(thetas)})};
          });
    r.back().cancel = Rational(1, 2);
  }
  numeric_record("I9", "theta1(z,q^2) theta3(z,q^2) / theta1(z,iq) = i^(-1/4) sqrt(theta2(0,q^2) theta4(0,q^2)/2)",
                 "Walker's theta identity at nome iq", walker, phases(8, -7 * kPi / 16, kPi / 8));
  numeric_record("I9b", "theta1(z, i sqrt(q)) = 2 i^(1/4) q^(1/8) sum (-1)^n (-q)^(n(n+1)/2) sin((2n+1)z)",
                 "Expansion of theta1 at nome i sqrt(q), derived from the theta1 Fourier series", bridge,
                 phases(8, 0, kPi / 4));
  exact("I10", "f^3(-q^2) = psi(q^2) phi^2(-q^2)", "Berndt (1.3.34)", [](const Rational& n, Kernel k) {
    const PSeries f = build_f_sum(ArgSpec::neg(2), n);
    const PSeries phi = build_phi(ArgSpec::neg(2), n);
    return std::vector<Equation>{
        eq("f^3(-q^2) = psi(q^2) phi^2(-q^2)", ps_pow(f, 3, k), ps_mul(build_psi(ArgSpec::pos(2), n), ps_mul(phi, phi, k), k))};
  });
  exact("I11", "phi^2(-q^2) = phi(q) phi(-q)", "Berndt (1.3.32)", [](const Rational& n, Kernel k) {
    const PSeries phi = build_phi(ArgSpec::neg(2), n);
    return std::vector<Equation>{eq("phi^2(-q^2) = phi(q) phi(-q)", ps_mul(phi, phi, k),
                                    ps_mul(build_phi(ArgSpec::q(), n), build_phi(ArgSpec::neg(1), n), k))};
  });
  exact("I12", "f(q) = chi(q) f(-q^2)", "Berndt (1.3.31)", [](const Rational& n, Kernel k) {
    return std::vector<Equation>{eq("f(q) = chi(q) f(-q^2)", build_f_sum(ArgSpec::q(), n),
                                    ps_mul(build_chi(ArgSpec::q(), n), build_f_sum(ArgSpec::neg(2), n), k))};
  });
  exact("I13a",
        "chi(q^5) as a quotient with unsigned denominator sums: chi(q^5) 4 S_3 S_1 = phi(q) f(q), "
        "S_k = sum (-q)^(n(n+1)/2) sin((2n+1)k pi/10)",
        "Quotient formula for chi(q^5) with unsigned sine-weighted denominator sums",
        [](const Rational& n, Kernel k) { return std::vector<Equation>{main_identity(SumVariant::literal, n, k)}; },
        ExpectedVerdict{Rational(1)});
  exact("I13b",
        "chi(q^5) as a quotient with alternating denominator sums: chi(q^5) 4 T_3 T_1 = phi(q) f(q), "
        "T_k = sum (-1)^n (-q)^(n(n+1)/2) sin((2n+1)k pi/10)",
        "Quotient formula for chi(q^5), denominator sums from the theta1(z, i sqrt q) expansion",
        [](const Rational& n, Kernel k) { return std::vector<Equation>{main_identity(SumVariant::signed_, n, k)}; });
  exact("I14", "theta2(0,q) = 2 q^(1/4) psi(q^2)", "Definitions of theta2 and psi", [](const Rational& n, Kernel) {
    return std::vector<Equation>{eq("theta2(0,q) = 2 q^(1/4) psi(q^2)", build_theta_sum(2, {0}, ArgSpec::q(), n),
                                    ps_shift(ps_scale(build_psi(ArgSpec::pos(2), n), 2), Rational(1, 4)))};
  });
  exact("I15", "theta4(0,q) = phi(-q)", "Definitions of theta4 and phi", [](const Rational& n, Kernel) {
    return std::vector<Equation>{
        eq("theta4(0,q) = phi(-q)", build_theta_sum(4, {0}, ArgSpec::q(), n), build_phi(ArgSpec::neg(1), n))};
  });
  return r;
}

}  // namespace

const std::vector<IdentityRecord>& registry() {
  static const std::vector<IdentityRecord> records = make_registry();
  return records;
}

const IdentityRecord& lookup(std::string_view id) {
  for (const IdentityRecord& r : registry())
    if (r.id == id) return r;
  throw Error(ErrorKind::UnknownIdentity, "no identity named '" + std::string(id) + "'");
}

std::vector<long double> default_radii() { return {0.05L, 0.1L, 0.2L, 0.3L}; }
std::vector<long double> default_angles() { return {kPi / 10, 3 * kPi / 10}; }

std::vector<NumericSample> make_grid(const std::vector<long double>& radii, const std::vector<long double>& phase_list,
                                     const std::vector<long double>& angles) {
  std::vector<NumericSample> out;
  for (const long double r : radii)
    for (const long double p : phase_list)
      for (const long double z : angles) out.push_back({std::polar(r, p), z});
  return out;
}

}  // namespace qseries
