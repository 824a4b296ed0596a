#include "qseries/verify.hpp"

#include <cmath>
#include <exception>
#include <numeric>

#include "qseries/error.hpp"

namespace qseries {

namespace {

using Clock = std::chrono::steady_clock;

PSeries cross(const SeriesFraction& a, const SeriesFraction& b, Kernel kernel) {
  return b.den ? ps_mul(a.num, *b.den, kernel) : a.num;
}

void tally(const PSeries& lhs, const PSeries& rhs, const Rational& up_to, CoefficientStats& stats) {
  const long d = std::lcm(lhs.exp_den(), rhs.exp_den());
  const PSeries a = lhs.aligned(d), b = rhs.aligned(d);
  for (std::size_t j = 0; j < a.slots() && j < b.slots() && a.exponent(j) < up_to; ++j) {
    ++stats.compared;
    const K5& x = a.slot(j);
    const K5& y = b.slot(j);
    if (!x.is_rational() || !y.is_rational()) ++stats.irrational;
    if (j % static_cast<std::size_t>(d) != 0 && (!x.is_zero() || !y.is_zero())) ++stats.fractional_exp;
  }
}

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

}  // namespace

std::string_view to_string(Backend b) { return b == Backend::exact ? "exact" : "numeric"; }

std::string ExpectedVerdict::str() const { return fail_at ? "fail at q^" + fail_at->str() : "pass"; }

bool VerificationReport::matches_expected() const {
  if (skipped) return true;
  if (order && expected.expects_failure(*order))
    return !pass && first_mismatch && first_mismatch->exp == *expected.fail_at;
  return pass;
}

VerificationReport check_exact(std::string_view id, const Rational& order, Kernel kernel) {
  const IdentityRecord& rec = lookup(id);
  if (rec.backend != Backend::exact)
    throw Error(ErrorKind::BackendMismatch, std::string(id) + " is checked by the numeric backend");
  if (order.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "order must be positive");

  const auto start = Clock::now();
  VerificationReport report;
  report.id = rec.id;
  report.backend = Backend::exact;
  report.order = order;
  report.kernel = kernel;
  report.expected = rec.expected;

  const Rational internal = order + rec.cancel;
  for (const Equation& e : rec.exact(internal, kernel)) {
    PSeries lhs = cross(e.lhs, e.rhs, kernel);
    PSeries rhs = cross(e.rhs, e.lhs, kernel);
    if (!rec.cancel.is_zero()) {
      lhs = ps_unshift(lhs, rec.cancel);
      rhs = ps_unshift(rhs, rec.cancel);
    }
    tally(lhs, rhs, order, report.stats);
    const CmpResult cmp = ps_cmp(lhs, rhs, order);
    if (!cmp.equal() && !report.first_mismatch) {
      report.first_mismatch = cmp.mismatch;
      report.mismatch_equation = e.label;
    }
  }
  report.pass = !report.first_mismatch.has_value();
  report.elapsed = since(start);
  return report;
}

VerificationReport check_numeric(std::string_view id, const std::vector<NumericSample>& grid, long double tol,
                                 int terms) {
  const IdentityRecord& rec = lookup(id);
  if (rec.backend != Backend::numeric)
    throw Error(ErrorKind::BackendMismatch, std::string(id) + " is checked by the exact backend");
  if (terms < 1) throw Error(ErrorKind::InvalidArgument, "terms must be >= 1");
  if (!(tol > 0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  for (const NumericSample& s : grid)
    if (std::abs(s.q) > 0.5L) throw Error(ErrorKind::InvalidArgument, "sample |q| exceeds 1/2");

  const auto start = Clock::now();
  VerificationReport report;
  report.id = rec.id;
  report.backend = Backend::numeric;
  report.tolerance = tol;
  report.terms = terms;
  report.samples = grid.size();
  report.expected = rec.expected;
  if (grid.empty()) {
    report.skipped = true;
    report.elapsed = since(start);
    return report;
  }

  for (const NumericSample& s : grid) {
    const NumericSides sides = rec.numeric(s, terms);
    if (sides.tail > tol / 1000)
      throw Error(ErrorKind::NonConvergent, "last theta term " + std::to_string(static_cast<double>(sides.tail)) +
                                                " exceeds tol/1000 at |q| = " +
                                                std::to_string(static_cast<double>(std::abs(s.q))));
    const long double err = std::abs(sides.lhs - sides.rhs);
    if (!report.worst || err > report.worst->error) report.worst = NumericWorst{s, err, sides.lhs, sides.rhs, {}};
  }
  NumericWorst& w = *report.worst;
  report.pass = w.error <= tol;
  if (!report.pass && std::abs(w.rhs) > 0) {
    const numeric::ComplexValue ratio = w.lhs / w.rhs;
    if (std::abs(std::abs(ratio) - 1.0L) <= tol) w.phase_ratio = ratio;
  }
  report.elapsed = since(start);
  return report;
}

std::vector<VerificationReport> run_all(const RunOptions& options) {
  const auto& records = registry();
  std::vector<VerificationReport> reports(records.size());
  const auto n = static_cast<std::ptrdiff_t>(records.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const IdentityRecord& rec = records[static_cast<std::size_t>(i)];
    VerificationReport& out = reports[static_cast<std::size_t>(i)];
    try {
      if (rec.backend == Backend::exact) {
        out = check_exact(rec.id, options.order, options.kernel);
      } else {
        out = check_numeric(rec.id, options.grid ? *options.grid : rec.default_grid(), options.tolerance,
                            options.terms);
      }
    } catch (const std::exception& e) {
      out = VerificationReport{};
      out.id = rec.id;
      out.backend = rec.backend;
      out.expected = rec.expected;
      out.error = e.what();
    }
  }
  return reports;
}

}  // namespace qseries
