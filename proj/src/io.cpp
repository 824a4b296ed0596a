#include "qseries/io.hpp"

#include <cstdio>
#include <sstream>

#include "qseries/error.hpp"

namespace qseries {

namespace {

using nlohmann::json;

std::string kernel_name(Kernel k) { return k == Kernel::naive ? "naive" : "karatsuba"; }

json order_json(const Rational& r) {
  if (r.is_integer() && r.num().fits_slong_p()) return r.num().get_si();
  return r.str_pq();
}

std::string sci(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3Le", v);
  return buf;
}

}  // namespace

json series_to_json(const PSeries& x) {
  json coeffs = json::array();
  for (std::size_t j = 0; j < x.slots(); ++j) {
    const K5& c = x.slot(j);
    if (c.is_zero()) continue;
    coeffs.push_back({{"exp", x.exponent(j).str_pq()},
                      {"a", c.rational_part().str_pq()},
                      {"b", c.sqrt5_part().str_pq()}});
  }
  return {{"expDen", x.exp_den()}, {"order", x.order().str_pq()}, {"coeffs", std::move(coeffs)}};
}

PSeries series_from_json(const json& j) {
  try {
    PSeries s(j.at("expDen").get<long>(), Rational::parse(j.at("order").get<std::string>()));
    for (const json& c : j.at("coeffs")) {
      const Rational e = Rational::parse(c.at("exp").get<std::string>());
      const Rational slot = e * Rational(s.exp_den());
      if (!slot.is_integer() || e.sign() < 0 || e >= s.order())
        throw Error(ErrorKind::InvalidArgument, "exponent " + e.str() + " off the series grid");
      s.set_slot(slot.num().get_ui(), K5(Rational::parse(c.at("a").get<std::string>()),
                                         Rational::parse(c.at("b").get<std::string>())));
    }
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed series json: ") + e.what());
  }
}

json report_to_json(const VerificationReport& r) {
  json params = json::object();
  if (r.order) params["order"] = order_json(*r.order);
  if (r.kernel) params["kernel"] = kernel_name(*r.kernel);
  if (r.tolerance) params["tol"] = static_cast<double>(*r.tolerance);
  if (r.terms) params["terms"] = *r.terms;
  if (r.backend == Backend::numeric) params["samples"] = r.samples;

  json mismatch = nullptr;
  if (r.first_mismatch)
    mismatch = {{"exp", r.first_mismatch->exp.str_pq()},
                {"lhs", r.first_mismatch->lhs.str()},
                {"rhs", r.first_mismatch->rhs.str()}};

  json out = {{"id", r.id},
              {"backend", std::string(to_string(r.backend))},
              {"params", std::move(params)},
              {"pass", r.pass},
              {"skipped", r.skipped},
              {"first_mismatch", std::move(mismatch)},
              {"max_err", r.worst ? json(static_cast<double>(r.worst->error)) : json(nullptr)},
              {"elapsed_ms", r.elapsed.count()},
              {"expected", r.expected.str()},
              {"matches_expected", r.matches_expected()}};
  if (r.mismatch_equation) out["equation"] = *r.mismatch_equation;
  if (r.backend == Backend::exact)
    out["stats"] = {{"compared", r.stats.compared},
                    {"irrational", r.stats.irrational},
                    {"fractional_exp", r.stats.fractional_exp}};
  if (r.worst) {
    const auto& w = *r.worst;
    out["worst_sample"] = {{"q_re", static_cast<double>(w.sample.q.real())},
                           {"q_im", static_cast<double>(w.sample.q.imag())},
                           {"z", static_cast<double>(w.sample.z)}};
    out["phase_ratio"] = w.phase_ratio ? json{{"re", static_cast<double>(w.phase_ratio->real())},
                                              {"im", static_cast<double>(w.phase_ratio->imag())}}
                                       : json(nullptr);
  }
  if (r.error) out["error"] = *r.error;
  return out;
}

json record_to_json(const IdentityRecord& r) {
  return {{"id", r.id},
          {"backend", std::string(to_string(r.backend))},
          {"description", r.description},
          {"citation", r.citation},
          {"expected", r.expected.str()}};
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream os;
  const char* verdict = r.skipped ? "SKIPPED" : (r.pass ? "PASS" : "FAIL");
  os << r.id << " [" << to_string(r.backend) << "] " << verdict;
  if (r.order) os << "  N=" << r.order->str();
  if (r.kernel) os << " kernel=" << kernel_name(*r.kernel);
  if (r.terms) os << "  terms=" << *r.terms << " samples=" << r.samples << " tol=" << sci(*r.tolerance);
  if (r.worst) os << " max_err=" << sci(r.worst->error);
  os << "  (" << r.elapsed.count() << " ms)";
  if (r.first_mismatch) {
    os << "\n    first mismatch at q^" << r.first_mismatch->exp.str();
    if (r.mismatch_equation) os << " in " << *r.mismatch_equation;
    os << ": lhs = " << r.first_mismatch->lhs.str() << ", rhs = " << r.first_mismatch->rhs.str();
  }
  if (r.worst && r.worst->phase_ratio)
    os << "\n    sides differ by the unimodular factor " << sci(r.worst->phase_ratio->real()) << " + "
       << sci(r.worst->phase_ratio->imag()) << "i";
  if (r.error) os << "\n    error: " << *r.error;
  if (r.expected.fail_at) os << "\n    expected: " << r.expected.str() << (r.matches_expected() ? " (as expected)" : " (UNEXPECTED)");
  return os.str();
}

}  // namespace qseries
