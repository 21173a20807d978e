#include "domavg/reports.hpp"

#include "domavg/graph6.hpp"

namespace domavg {

using nlohmann::json;

json rational_json(const Rational& r) {
    return json{{"num", to_decimal(rational_num(r))}, {"den", to_decimal(rational_den(r))}};
}

json tally_json(const Graph& g, const DominationTally& tally) {
    json d = json::array();
    for (const BigInt& c : tally.d) d.push_back(to_decimal(c));
    json out{
        {"graph6", encode_graph6(g)},
        {"n", tally.n},
        {"d", d},
        {"gamma", tally.gamma()},
        {"Gamma", to_decimal(tally.total())},
        {"GammaPrime", to_decimal(tally.weighted_total())},
    };
    if (tally.n >= 1)
        out["avd"] = rational_json(average_order(tally).average);
    else
        out["avd"] = nullptr;
    return out;
}

json bound_json(const Graph& g, const BoundReport& report) {
    json out{
        {"check", "bound"},
        {"graph6", encode_graph6(g)},
        {"verdict", to_string(report.verdict)},
        {"n", report.n},
        {"isolated", report.isolated_count},
        {"holds", report.verdict != BoundVerdict::violated &&
                      report.equality_matches_star_like},
    };
    if (report.verdict != BoundVerdict::not_applicable) {
        out["avd"] = rational_json(report.average);
        out["bound"] = rational_json(report.bound);
        out["star_like"] = report.star_like;
        out["equality_matches_star_like"] = report.equality_matches_star_like;
    }
    return out;
}

json profile_json(const SetProfile& profile) {
    return json{
        {"S", profile.s.to_vector()},   {"a", profile.a.to_vector()},
        {"a1", profile.a1.to_vector()}, {"a2", profile.a2.to_vector()},
        {"N1", profile.n1.to_vector()}, {"N2", profile.n2.to_vector()},
    };
}

json check_json(const Graph& g, const CheckReport& report) {
    json out{
        {"check", report.check},
        {"graph6", encode_graph6(g)},
        {"holds", report.holds},
        {"applicable", report.applicable},
        {"lhs", to_decimal(report.lhs)},
        {"rhs", to_decimal(report.rhs)},
    };
    out["witness"] = report.witness ? profile_json(*report.witness) : json(nullptr);
    if (!report.note.empty()) out["note"] = report.note;
    return out;
}

json poly_json(const Graph& g, const PolyReport& report) {
    json coeffs = json::array();
    for (const BigInt& c : report.coefficients.d) coeffs.push_back(to_decimal(c));
    json out{
        {"graph6", encode_graph6(g)}, {"coeffs", coeffs},
        {"mode", report.mode_indices}, {"unimodal", report.unimodal},
        {"real_rooted", report.real_rooted},
    };
    out["darroch"] = report.darroch_consistent ? json(*report.darroch_consistent) : json(nullptr);
    return out;
}

json survey_json(const ModeSurveyReport& report) {
    json rows = json::array();
    for (const ModeSurveyRow& row : report.rows)
        rows.push_back(json{{"graph6", row.graph6},
                            {"largest_mode", row.largest_mode},
                            {"mode", row.mode_indices},
                            {"star_like", row.star_like}});
    return json{
        {"n", report.n},
        {"max_mode_index", report.max_mode_index},
        {"attaining", report.attaining},
        {"star_like_attains", report.star_like_attains},
        {"rows", rows},
    };
}

json search_json(const SearchConstraint& constraint, const ExtremalResult& result) {
    return json{
        {"constraint",
         json{{"n", constraint.n},
              {"min_degree", constraint.min_degree},
              {"connected", constraint.connected},
              {"no_isolated", constraint.no_isolated}}},
        {"best_avd", rational_json(result.best_avd)},
        {"argmax", result.argmax},
        {"examined", result.examined},
    };
}

json theorem_json(const TheoremReport& report) {
    return json{
        {"check", "main_theorem"},
        {"n", report.n},
        {"examined", report.examined},
        {"holds", report.bound_holds_all && report.equality_set_is_star_like},
        {"bound_holds_all", report.bound_holds_all},
        {"equality_set_is_star_like", report.equality_set_is_star_like},
        {"equality", report.equality_graph6},
        {"connected_equality", report.connected_equality_graph6},
    };
}

} // namespace domavg
