#include "slopeforge/serialize.hpp"

namespace slopeforge::serialize {

json rat_json(const Rat& value) { return format_fraction(value); }

json int_json(const Int& value) { return value.str(); }

json json_of(const numtheory::HJExpansion& e) {
    return json{
        {"p", e.p},
        {"q", e.q},
        {"terms", e.terms},
        {"length", e.length()},
    };
}

json json_of(const numtheory::DedekindRecord& r) {
    return json{
        {"q", r.q},     {"p", r.p},
        {"s", rat_json(r.s)},
        {"l", r.l},
        {"c", rat_json(r.c)},
        {"q_inv", r.q_inv},
    };
}

json json_of(const rootcover::FamilyParams& params, const rootcover::ChernInvariants& inv) {
    json out{
        {"p", params.p},
        {"alpha", params.alpha},
        {"beta", params.beta},
        {"d", params.d},
        {"n", params.n()},
        {"c2", int_json(inv.c2)},
        {"c1sq_partial", rat_json(inv.c1sq_partial)},
        {"residual_omitted", inv.residual_omitted()},
        {"genus_sum", int_json(inv.genus_sum)},
        {"log_c1sq", int_json(inv.log_c1sq)},
        {"log_c2", int_json(inv.log_c2)},
        {"slope", rat_json(inv.slope())},
        {"formal", inv.formal},
    };
    if (inv.residual_A_sq) {
        out["residual_A_sq"] = int_json(*inv.residual_A_sq);
        out["c1sq_total"] = rat_json(inv.c1sq_total());
    }
    return out;
}

json json_of(const product::ProductInvariants& inv) {
    return json{
        {"c1sq", rat_json(inv.c1sq)},
        {"c2", rat_json(inv.c2)},
        {"chi", rat_json(inv.chi)},
        {"coupling", rat_json(inv.coupling)},
        {"deg_to_x", rat_json(inv.deg_to_x)},
        {"deg_to_y", rat_json(inv.deg_to_y)},
    };
}

json json_of(const slope_search::SlopeCertificate& cert) {
    return json{
        {"target_r", rat_json(cert.target_r)},
        {"x_star", cert.x_star},
        {"alpha", int_json(cert.alpha)},
        {"beta", int_json(cert.beta)},
        {"asymptotic_slope", rat_json(cert.asymptotic_slope)},
        {"asymptotic_error", rat_json(cert.asymptotic_error)},
        {"witness_p", cert.witness_p},
        {"witness_slope", rat_json(cert.witness_slope)},
        {"residual_note", cert.residual_note},
    };
}

json json_of(const slope_search::DensityRow& row) {
    return json{
        {"alpha", row.alpha},
        {"beta", row.beta},
        {"p", row.p},
        {"d", row.d},
        {"lambda", rat_json(row.lambda)},
        {"witness_slope", rat_json(row.witness_slope)},
        {"difference", rat_json(row.difference)},
    };
}

json json_of(const bounds::MultiplicityScheme& scheme) {
    return json{
        {"p", scheme.p}, {"a", scheme.a}, {"b", scheme.b}, {"c", scheme.c}, {"m", scheme.m},
    };
}

json json_of(const bounds::SchemeRow& row) {
    return json{
        {"p", row.scheme.p},
        {"a", row.scheme.a},
        {"b", row.scheme.b},
        {"c", row.scheme.c},
        {"m", row.scheme.m},
        {"S", rat_json(row.sums.S)},
        {"L", row.sums.L},
        {"C", rat_json(row.sums.C)},
        {"six_S_plus_L", rat_json(row.six_s_plus_l)},
        {"bound", rat_json(row.bound)},
        {"slack", rat_json(row.slack)},
        {"limit_slope", rat_json(row.limit_slope)},
    };
}

json json_of(const bounds::BoundsReport& report) {
    json violations = json::array();
    for (const auto& row : report.violations)
        violations.push_back(json_of(row));
    return json{
        {"p_max", report.p_max},
        {"schemes_checked", report.schemes_checked},
        {"ok", report.ok()},
        {"violations", violations},
        {"min_slack", rat_json(report.min_slack)},
        {"extremal_scheme", json_of(report.extremal_scheme)},
        {"min_limit_slope", rat_json(report.min_limit_slope)},
        {"min_limit_scheme", json_of(report.min_limit_scheme)},
    };
}

json json_of(const bounds::LemmaReport& report) {
    json violations = json::array();
    for (const auto& [q, p] : report.violations)
        violations.push_back(json{{"q", q}, {"p", p}});
    json per_modulus = json::array();
    for (const auto& pm : report.per_modulus)
        per_modulus.push_back(json{
            {"p", pm.p},
            {"pairs", pm.pairs},
            {"max_sum", pm.max_sum},
            {"equality_count", pm.equality_count},
        });
    return json{
        {"p_max", report.p_max},
        {"pairs_checked", report.pairs_checked},
        {"ok", report.ok()},
        {"violations", violations},
        {"per_modulus", per_modulus},
    };
}

}  // namespace slopeforge::serialize
