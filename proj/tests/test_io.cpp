#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "qseries/error.hpp"
#include "qseries/io.hpp"
#include "schema_check.hpp"

using namespace qseries;
using nlohmann::json;
using testing::report_schema_violations;

TEST_CASE("series json layout") {
  const json j = series_to_json(build_phi(ArgSpec::q(), Rational(5)));
  CHECK(j["expDen"] == 1);
  CHECK(j["order"] == "5/1");
  REQUIRE(j["coeffs"].size() == 3);
  CHECK(j["coeffs"][1] == json{{"exp", "1/1"}, {"a", "2/1"}, {"b", "0/1"}});
  CHECK(j["coeffs"][2]["exp"] == "4/1");

  const json t = series_to_json(build_theta_sum(1, {1}, ArgSpec::q(), Rational(1)));
  CHECK(t["expDen"] == 4);
  CHECK(t["coeffs"][0] == json{{"exp", "1/4"}, {"a", "-1/2"}, {"b", "1/2"}});
}

TEST_CASE("property: series json round trip") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const PSeries s = testing::random_series(rng, 1 + static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 20));
    CHECK(series_from_json(json::parse(series_to_json(s).dump())) == s);
  }
}

TEST_CASE("malformed series json") {
  CHECK_THROWS_AS(series_from_json(json{{"expDen", 1}}), Error);
  CHECK_THROWS_AS(series_from_json(json{{"expDen", 1}, {"order", "2"}, {"coeffs", {{{"exp", "1/2"}, {"a", "1"}, {"b", "0"}}}}}),
                  Error);
}

TEST_CASE("reports validate against the schema") {
  std::vector<VerificationReport> reports{check_exact("I1", Rational(20)), check_exact("I13a", Rational(5)),
                                          check_exact("I8", Rational(4)),
                                          check_numeric("I9", lookup("I9").default_grid(), 1e-9L, 50),
                                          check_numeric("I9", {}, 1e-9L, 50)};
  for (const auto& r : reports) {
    const json j = report_to_json(r);
    const auto problems = report_schema_violations(j);
    CHECK_MESSAGE(problems.empty(), r.id << ": " << (problems.empty() ? "" : problems.front()));
    CHECK_FALSE(report_to_text(r).empty());
  }
  const json fail = report_to_json(reports[1]);
  CHECK(fail["pass"] == false);
  CHECK(fail["matches_expected"] == true);
  CHECK(fail["first_mismatch"]["exp"] == "1/1");
  CHECK(report_to_json(reports[0])["first_mismatch"].is_null());
  CHECK(report_to_json(reports[4])["skipped"] == true);
}

TEST_CASE("schema check rejects malformed reports") {
  json j = report_to_json(check_exact("I1", Rational(5)));
  j.erase("pass");
  CHECK_FALSE(report_schema_violations(j).empty());
  j = report_to_json(check_exact("I1", Rational(5)));
  j["backend"] = "symbolic";
  CHECK_FALSE(report_schema_violations(j).empty());
}

TEST_CASE("registry records serialize") {
  for (const auto& rec : registry()) {
    const json j = record_to_json(rec);
    CHECK(j["id"] == rec.id);
    CHECK(j.contains("citation"));
  }
}
