#pragma once

#include <json.hpp>

#include "parahoric/degree_stability.hpp"
#include "parahoric/laurent.hpp"
#include "parahoric/parahoric_local.hpp"
#include "parahoric/root_datum.hpp"

// All rationals are exact in the wire formats: either an integer, a
// "num/den" string, or a [num, den] pair.  Emitted documents render
// rationals as "num/den" strings (plain integers when the denominator is
// one) and weights as [num, den] pairs; nothing is ever a float.

namespace parahoric {

using nlohmann::json;

Rational rational_from_json(const json& j);
json rational_to_json(const Rational& r);

Weight weight_from_json(const json& j);
json weight_to_json(const Weight& w);

RootDatum root_datum_from_json(const json& j);

LaurentMatrix matrix_from_json(const json& j);
json matrix_to_json(const LaurentMatrix& m);

ParabolicHiggsDatum higgs_datum_from_json(const json& j);
json higgs_datum_to_json(const ParabolicHiggsDatum& d);

/// {"flag": [[1], [1,2]], "lambda": ["-1", "1"]}; indices are 1-based on
/// the wire, 0-based in memory.
ReductionDatum reduction_from_json(const json& j, Index n);

json profile_to_json(const PoleProfile& p, bool both_conventions = false);
json report_to_json(const StabilityReport& r);
json check_result_to_json(const CheckResult& c);

/// Subset rendered 1-based as "{1,3}"; central witnesses as "center".
std::string witness_label(const std::optional<StabilityWitness>& w);

}  // namespace parahoric
