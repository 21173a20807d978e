#pragma once

#include <json.hpp>

#include "domavg/critical.hpp"
#include "domavg/domination.hpp"
#include "domavg/extremal.hpp"
#include "domavg/poly.hpp"

namespace domavg {

// Machine-readable reports: counts as decimal strings, rationals as
// {"num","den"} pairs, never floats.

nlohmann::json rational_json(const Rational& r);
nlohmann::json tally_json(const Graph& g, const DominationTally& tally);
nlohmann::json bound_json(const Graph& g, const BoundReport& report);
nlohmann::json check_json(const Graph& g, const CheckReport& report);
nlohmann::json profile_json(const SetProfile& profile);
nlohmann::json poly_json(const Graph& g, const PolyReport& report);
nlohmann::json survey_json(const ModeSurveyReport& report);
nlohmann::json search_json(const SearchConstraint& constraint, const ExtremalResult& result);
nlohmann::json theorem_json(const TheoremReport& report);

} // namespace domavg
