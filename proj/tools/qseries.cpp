// qseries: expand q-series expressions, verify the identity registry,
// benchmark the multiplication kernels.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qseries/dsl.hpp"
#include "qseries/error.hpp"
#include "qseries/io.hpp"
#include "qseries/verify.hpp"

namespace {

using namespace qseries;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CliConfig {
  long order = 100;
  std::string kernel = "karatsuba";
  std::string format = "text";
  double tol = 1e-9;
  int terms = 50;
  std::string samples = "default";
};

Kernel kernel_of(const CliConfig& c) { return c.kernel == "naive" ? Kernel::naive : Kernel::karatsuba; }

bool json_out(const CliConfig& c) { return c.format == "json"; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

// "default" | "none" | "r1,r2,...[@phases]"
std::optional<std::vector<NumericSample>> parse_samples(const std::string& text) {
  if (text == "default") return std::nullopt;
  if (text == "none") return std::vector<NumericSample>{};
  const Error bad(ErrorKind::InvalidArgument, "bad --samples '" + text + "'");
  const auto at = text.find('@');
  std::vector<long double> radii;
  int count = 1;
  try {
    std::size_t used = 0;
    for (const std::string& r : split(text.substr(0, at), ',')) {
      radii.push_back(std::stold(r, &used));
      if (used != r.size()) throw bad;
    }
    if (at != std::string::npos) {
      const std::string c = text.substr(at + 1);
      count = std::stoi(c, &used);
      if (used != c.size()) throw bad;
    }
  } catch (const std::logic_error&) {
    throw bad;
  }
  if (radii.empty() || count < 1) throw bad;
  std::vector<long double> phases;
  for (int k = 0; k < count; ++k) phases.push_back(2 * numeric::kPi * k / count);
  return make_grid(radii, phases, default_angles());
}

void print_error(const Error& e, const std::string& source) {
  std::cerr << "error: " << e.what() << "\n";
  if (e.has_span() && !source.empty()) {
    const SourceSpan s = e.span();
    std::cerr << "  " << source << "\n  " << std::string(s.start, ' ')
              << std::string(std::max<std::size_t>(1, s.end - s.start), '^') << "\n";
  }
}

int cmd_expand(const std::string& text, const CliConfig& cfg) {
  try {
    const PSeries s = dsl::eval(dsl::parse(text), Rational(cfg.order), kernel_of(cfg));
    if (json_out(cfg)) {
      std::cout << series_to_json(s).dump(2) << "\n";
      return kExitOk;
    }
    for (std::size_t j = 0; j < s.slots(); ++j)
      if (!s.slot(j).is_zero()) std::cout << "q^" << s.exponent(j) << "\t" << s.slot(j) << "\n";
    std::cout << "O(q^" << s.order() << ")\n";
    return kExitOk;
  } catch (const Error& e) {
    print_error(e, text);
    return kExitUsage;
  }
}

VerificationReport run_one(const IdentityRecord& rec, const CliConfig& cfg) {
  if (rec.backend == Backend::exact) return check_exact(rec.id, Rational(cfg.order), kernel_of(cfg));
  const auto grid = parse_samples(cfg.samples);
  return check_numeric(rec.id, grid ? *grid : rec.default_grid(), cfg.tol, cfg.terms);
}

int cmd_verify(const std::string& id, const CliConfig& cfg) {
  try {
    const VerificationReport r = run_one(lookup(id), cfg);
    if (json_out(cfg)) {
      std::cout << report_to_json(r).dump(2) << "\n";
    } else {
      std::cout << report_to_text(r) << "\n";
    }
    return r.pass || r.skipped ? kExitOk : kExitFail;
  } catch (const Error& e) {
    print_error(e, "");
    return kExitUsage;
  }
}

int cmd_verify_all(const CliConfig& cfg) {
  RunOptions opts;
  opts.order = Rational(cfg.order);
  opts.kernel = kernel_of(cfg);
  opts.tolerance = cfg.tol;
  opts.terms = cfg.terms;
  try {
    opts.grid = parse_samples(cfg.samples);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const std::vector<VerificationReport> reports = run_all(opts);

  int pass = 0, expected_fail = 0, skipped = 0, unexpected = 0;
  for (const VerificationReport& r : reports) {
    if (!r.matches_expected()) {
      ++unexpected;
    } else if (r.skipped) {
      ++skipped;
    } else if (r.pass) {
      ++pass;
    } else {
      ++expected_fail;
    }
  }
  std::ostringstream summary;
  summary << pass << " pass, " << expected_fail << " expected-fail";
  if (skipped) summary << ", " << skipped << " skipped";
  if (unexpected) summary << ", " << unexpected << " UNEXPECTED";

  if (json_out(cfg)) {
    nlohmann::json arr = nlohmann::json::array();
    for (const VerificationReport& r : reports) arr.push_back(report_to_json(r));
    std::cout << arr.dump(2) << "\n";
    std::cerr << summary.str() << "\n";
  } else {
    for (const VerificationReport& r : reports) std::cout << report_to_text(r) << "\n";
    std::cout << summary.str() << "\n";
  }
  return unexpected == 0 ? kExitOk : kExitFail;
}

PSeries random_dense(std::mt19937_64& rng, long order) {
  std::uniform_int_distribution<long> num(-99, 99), den(1, 12);
  PSeries s(1, Rational(order));
  for (std::size_t j = 0; j < s.slots(); ++j) s.set_slot(j, K5(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
  return s;
}

int cmd_bench(const std::string& orders_csv, const CliConfig& cfg) {
  std::vector<long> orders;
  try {
    for (const std::string& o : split(orders_csv, ',')) orders.push_back(std::stol(o));
  } catch (const std::exception&) {
    std::cerr << "error: --orders expects a comma-separated list of positive integers\n";
    return kExitUsage;
  }
  if (orders.empty() || std::any_of(orders.begin(), orders.end(), [](long o) { return o < 1; })) {
    std::cerr << "error: --orders expects a nonempty list of positive integers\n";
    return kExitUsage;
  }
  std::mt19937_64 rng(20261016);
  nlohmann::json rows = nlohmann::json::array();
  if (!json_out(cfg)) std::cout << std::left << std::setw(8) << "order" << std::setw(12) << "kernel" << "ms\n";
  for (const long order : orders) {
    const PSeries a = random_dense(rng, order), b = random_dense(rng, order);
    std::optional<PSeries> first;
    for (const Kernel k : {Kernel::naive, Kernel::karatsuba}) {
      const auto start = std::chrono::steady_clock::now();
      PSeries p = ps_mul(a, b, k);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      if (first && !(*first == p)) {
        std::cerr << "error: kernels disagree at order " << order << "\n";
        return kExitFail;
      }
      if (!first) first = std::move(p);
      const std::string name = k == Kernel::naive ? "naive" : "karatsuba";
      if (json_out(cfg)) {
        rows.push_back({{"order", order}, {"kernel", name}, {"ms", ms}});
      } else {
        std::cout << std::setw(8) << order << std::setw(12) << name << std::fixed << std::setprecision(3) << ms << "\n";
      }
    }
  }
  if (json_out(cfg)) std::cout << rows.dump(2) << "\n";
  return kExitOk;
}

int cmd_list(const CliConfig& cfg) {
  if (json_out(cfg)) {
    nlohmann::json arr = nlohmann::json::array();
    for (const IdentityRecord& r : registry()) arr.push_back(record_to_json(r));
    std::cout << arr.dump(2) << "\n";
    return kExitOk;
  }
  for (const IdentityRecord& r : registry())
    std::cout << std::left << std::setw(6) << r.id << std::setw(9) << to_string(r.backend) << r.citation << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-series expansion and identity verification over Q(sqrt 5)"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  if (const char* env = std::getenv("QSERIES_ORDER")) {
    try {
      cfg.order = std::stol(env);
    } catch (const std::exception&) {
      std::cerr << "error: QSERIES_ORDER must be an integer\n";
      return kExitUsage;
    }
  }
  app.add_option("-N,--order", cfg.order, "truncation order (exponents below N are exact)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--kernel", cfg.kernel, "series multiplication kernel")->check(CLI::IsMember({"naive", "karatsuba"}));
  app.add_option("--tol", cfg.tol, "numeric tolerance")->check(CLI::PositiveNumber);
  app.add_option("--terms", cfg.terms, "terms per theta sum in numeric checks")->check(CLI::PositiveNumber);
  app.add_option("--samples", cfg.samples, "numeric grid: default | none | r1,r2,...[@phases]");

  std::string expr, id, orders;
  auto* expand = app.add_subcommand("expand", "expand a DSL expression");
  expand->add_option("expr", expr, "expression, e.g. \"phi(q)*f(q)\"")->required();
  auto* verify = app.add_subcommand("verify", "check one registry identity");
  verify->add_option("id", id, "identity id, e.g. I4")->required();
  auto* verify_all = app.add_subcommand("verify-all", "check every registry identity");
  auto* bench = app.add_subcommand("bench", "time naive vs Karatsuba multiplication");
  bench->add_option("--orders", orders, "comma-separated orders, e.g. 64,256,1024")->required();
  auto* list = app.add_subcommand("list", "list the identity registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (cfg.order < 1) {
    std::cerr << "error: order must be >= 1\n";
    return kExitUsage;
  }
  if (*expand) return cmd_expand(expr, cfg);
  if (*verify) return cmd_verify(id, cfg);
  if (*verify_all) return cmd_verify_all(cfg);
  if (*bench) return cmd_bench(orders, cfg);
  if (*list) return cmd_list(cfg);
  return kExitUsage;
}
