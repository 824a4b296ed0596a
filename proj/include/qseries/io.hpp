#pragma once

#include "json.hpp"

#include "qseries/series.hpp"
#include "qseries/verify.hpp"

namespace qseries {

/// {"expDen": D, "order": "p/q", "coeffs": [{"exp","a","b"}, ...]},
/// zero coefficients omitted, exponents ascending.
nlohmann::json series_to_json(const PSeries& x);
PSeries series_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& r);
nlohmann::json record_to_json(const IdentityRecord& r);

/// Multi-line text form of a report.
std::string report_to_text(const VerificationReport& r);

}  // namespace qseries
