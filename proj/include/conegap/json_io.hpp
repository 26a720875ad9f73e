#pragma once

#include <string>

#include <json.hpp>

#include "conegap/cone_general.hpp"
#include "conegap/contraction.hpp"
#include "conegap/gauge.hpp"

namespace conegap {

using nlohmann::json;

/// JSON has no infinity; the documented token is the string "inf".
json metric_to_json(double v);
double metric_from_json(const json& j);

json complex_to_json(const Complex& z);
Complex complex_from_json(const json& j);

/// {"matrix": [[{"re":..,"im":..},...],...]}; throws std::invalid_argument
/// with a row/column position on malformed input.
CMat matrix_from_json(const json& j);
/// CSV with 2n columns (re, im interleaved), n rows.
CMat matrix_from_csv(const std::string& text);
/// Dispatches on the leading character ('{' means JSON).
CMat matrix_from_text(const std::string& text);
json matrix_to_json(const CMat& A);

/// {"vectors": [[{"re":..,"im":..},...],...]}
std::vector<CVec> vectors_from_json(const json& j);

/// {"functionals": [[{"re":..,"im":..},...],...]}
ConeSpec cone_spec_from_json(const json& j);
json cone_spec_to_json(const ConeSpec& spec);

json condition_report_to_json(const ConditionReport& r);
json certificate_to_json(const GapCertificate& cert);
json diameter_bounds_to_json(const DiameterBounds& db);
json power_result_to_json(const PowerResult& pr);
json region_to_json(const Region& r);
json inequality_report_to_json(const InequalityReport& rep);

}  // namespace conegap
