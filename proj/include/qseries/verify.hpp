#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qseries/kernels.hpp"
#include "qseries/numeric.hpp"
#include "qseries/series.hpp"

namespace qseries {

enum class Backend { exact, numeric };

std::string_view to_string(Backend b);

/// num / den, with den absent meaning 1. Exact identities are compared by
/// cross-multiplication, so a denominator is never inverted.
struct SeriesFraction {
  PSeries num;
  std::optional<PSeries> den;
};

/// One equation checked by an exact record. Most records hold a single
/// equation; I2/I3 hold one per angle and I7 one per side.
struct Equation {
  std::string label;
  SeriesFraction lhs;
  SeriesFraction rhs;
};

using ExactBuilder = std::function<std::vector<Equation>(const Rational& order, Kernel kernel)>;

struct NumericSample {
  numeric::ComplexValue q;
  long double z = 0;
};

struct NumericSides {
  numeric::ComplexValue lhs;
  numeric::ComplexValue rhs;
  /// Largest magnitude among the last terms of the truncated theta sums.
  long double tail = 0;
};

using NumericEvaluator = std::function<NumericSides(const NumericSample&, int terms)>;

/// The verdict a record is expected to reach. `fail_at` set means the
/// record is expected to fail with its first mismatch at that exponent,
/// whenever the checked order reaches past it.
struct ExpectedVerdict {
  std::optional<Rational> fail_at;

  bool expects_failure(const Rational& order) const { return fail_at && *fail_at < order; }
  std::string str() const;
};

struct IdentityRecord {
  std::string id;
  std::string description;
  std::string citation;
  Backend backend = Backend::exact;
  /// Power of q divided out of both cross-multiplied sides before the
  /// comparison; sides are built at order N + cancel.
  Rational cancel;
  ExactBuilder exact;
  NumericEvaluator numeric;
  std::function<std::vector<NumericSample>()> default_grid;
  ExpectedVerdict expected;
};

/// The immutable registry, in report order.
const std::vector<IdentityRecord>& registry();
/// Throws Error(UnknownIdentity).
const IdentityRecord& lookup(std::string_view id);

struct CoefficientStats {
  std::int64_t compared = 0;         ///< slots compared, summed over equations
  std::int64_t irrational = 0;       ///< compared slots with a nonzero sqrt5 part on either side
  std::int64_t fractional_exp = 0;   ///< nonzero coefficients at non-integer exponents
};

struct NumericWorst {
  NumericSample sample;
  long double error = 0;
  numeric::ComplexValue lhs;
  numeric::ComplexValue rhs;
  /// lhs/rhs when it is unimodular to within tolerance (branch diagnosis).
  std::optional<numeric::ComplexValue> phase_ratio;
};

struct VerificationReport {
  std::string id;
  Backend backend = Backend::exact;
  bool pass = false;
  bool skipped = false;

  // exact
  std::optional<Rational> order;
  std::optional<Kernel> kernel;
  std::optional<std::string> mismatch_equation;
  std::optional<Mismatch> first_mismatch;
  CoefficientStats stats;

  // numeric
  std::optional<long double> tolerance;
  std::optional<int> terms;
  std::size_t samples = 0;
  std::optional<NumericWorst> worst;

  std::chrono::milliseconds elapsed{0};
  ExpectedVerdict expected;
  /// Set when the check itself raised instead of producing a verdict.
  std::optional<std::string> error;

  /// True when the outcome is the record's expected verdict at this order.
  bool matches_expected() const;
};

VerificationReport check_exact(std::string_view id, const Rational& order,
                               Kernel kernel = Kernel::karatsuba);

/// Throws InvalidArgument for |q| > 1/2 or terms < 1, NonConvergent when a
/// truncated theta sum's last term exceeds tol/1000.
VerificationReport check_numeric(std::string_view id, const std::vector<NumericSample>& grid,
                                 long double tol, int terms);

struct RunOptions {
  Rational order{100};
  Kernel kernel = Kernel::karatsuba;
  /// Absent: every numeric record uses its own default grid.
  std::optional<std::vector<NumericSample>> grid;
  long double tolerance = 1e-9L;
  int terms = 50;
};

/// Every registry record, in registry order. Records may run concurrently.
std::vector<VerificationReport> run_all(const RunOptions& options);

/// Grid helpers. Angles default to {pi/10, 3pi/10}.
std::vector<NumericSample> make_grid(const std::vector<long double>& radii,
                                     const std::vector<long double>& phases,
                                     const std::vector<long double>& angles);
std::vector<long double> default_radii();
std::vector<long double> default_angles();

}  // namespace qseries
