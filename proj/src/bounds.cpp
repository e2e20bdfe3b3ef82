#include "slopeforge/bounds.hpp"

#include "slopeforge/parallel.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace slopeforge::bounds {

using numtheory::DedekindTable;

void MultiplicityScheme::validate() const {
    if (p < 5 || !numtheory::is_prime(p)) {
        throw std::domain_error("MultiplicityScheme: p must be a prime >= 5, got p=" +
                                std::to_string(p));
    }
    if (!(0 < a && a < p && 0 < b && b < p && 0 < c && c < p)) {
        throw std::domain_error("MultiplicityScheme: a, b, c must lie in (0,p)");
    }
    if (m != 1 && m != 2) {
        throw std::domain_error("MultiplicityScheme: m must be 1 or 2, got m=" +
                                std::to_string(m));
    }
    if (1 + a + b + c != m * p) {
        throw std::domain_error("MultiplicityScheme: need 1+a+b+c = m*p, got " +
                                std::to_string(1 + a + b + c) + " != " + std::to_string(m * p));
    }
}

std::array<std::int64_t, 6> scheme_arguments(const MultiplicityScheme& scheme) {
    scheme.validate();
    const std::int64_t p = scheme.p;
    const auto reduce = [p](std::int64_t v) { return ((v % p) + p) % p; };
    const std::int64_t a_inv = numtheory::mod_inverse(scheme.a, p);
    const std::int64_t b_inv = numtheory::mod_inverse(scheme.b, p);
    return {reduce(-scheme.a),           reduce(-scheme.b),           reduce(-scheme.c),
            reduce(-scheme.b * a_inv),   reduce(-scheme.c * a_inv),   reduce(-scheme.c * b_inv)};
}

std::vector<MultiplicityScheme> enumerate_schemes(std::int64_t p) {
    if (p < 5 || !numtheory::is_prime(p)) {
        throw std::domain_error("enumerate_schemes: p must be a prime >= 5, got p=" +
                                std::to_string(p));
    }
    std::vector<MultiplicityScheme> out;
    for (std::int64_t m = 1; m <= 2; ++m) {
        const std::int64_t sum = m * p - 1;  // a + b + c
        for (std::int64_t a = 1; a < p; ++a) {
            for (std::int64_t b = 1; b < p; ++b) {
                const std::int64_t c = sum - a - b;
                if (1 <= c && c < p) {
                    out.push_back({p, a, b, c, m});
                }
            }
        }
    }
    return out;
}

SchemeSums scheme_sums(const MultiplicityScheme& scheme) {
    const auto args = scheme_arguments(scheme);
    SchemeSums out;
    for (std::int64_t q : args) {
        const auto rec = numtheory::dedekind_record(q, scheme.p);
        out.S += rec.s;
        out.L += rec.l;
    }
    out.C = 12 * out.S + out.L;
    return out;
}

SchemeSums scheme_sums(const MultiplicityScheme& scheme, const DedekindTable& table) {
    if (table.modulus() != scheme.p) {
        throw std::domain_error("scheme_sums: table modulus does not match scheme");
    }
    const auto args = scheme_arguments(scheme);
    SchemeSums out;
    for (std::int64_t q : args) {
        out.S += table.s(q);
        out.L += table.length(q);
    }
    out.C = 12 * out.S + out.L;
    return out;
}

Rat limit_slope_x0(const MultiplicityScheme& scheme, const SchemeSums& sums) {
    const Rat p{scheme.p};
    return (12 - sums.C / p) / (6 + Rat(sums.L) / p);
}

Rat limit_slope_x0(const MultiplicityScheme& scheme) {
    return limit_slope_x0(scheme, scheme_sums(scheme));
}

BoundsReport verify_lomaschico(std::int64_t p_max, int threads, std::vector<SchemeRow>* rows) {
    if (p_max < 5) {
        throw std::domain_error("verify_lomaschico: p_max must be >= 5");
    }
    const auto primes = numtheory::primes_up_to(p_max);
    std::vector<std::int64_t> todo;
    for (std::int64_t p : primes) {
        if (p >= 5) todo.push_back(p);
    }

    struct PerPrime {
        std::uint64_t checked = 0;
        std::vector<SchemeRow> violations;
        SchemeRow min_slack_row;
        SchemeRow min_limit_row;
        std::vector<SchemeRow> all;
    };
    std::vector<PerPrime> results(todo.size());
    const bool keep_rows = rows != nullptr;

    parallel_for(todo.size(), threads, [&](std::size_t idx) {
        const std::int64_t p = todo[idx];
        PerPrime& res = results[idx];
        const DedekindTable table(p);
        const Rat bound = Rat(3 * p + 3) - Rat(6, p);
        const Rat limit_bound = 1 - Rat(1, p);
        bool first = true;
        for (const MultiplicityScheme& scheme : enumerate_schemes(p)) {
            SchemeRow row;
            row.scheme = scheme;
            row.sums = scheme_sums(scheme, table);
            row.six_s_plus_l = 6 * row.sums.S + row.sums.L;
            row.bound = bound;
            row.slack = bound - row.six_s_plus_l;
            row.limit_slope = limit_slope_x0(scheme, row.sums);
            ++res.checked;
            if (row.slack < 0 || row.limit_slope < limit_bound) {
                res.violations.push_back(row);
            }
            if (first || row.slack < res.min_slack_row.slack) res.min_slack_row = row;
            if (first || row.limit_slope < res.min_limit_row.limit_slope) res.min_limit_row = row;
            first = false;
            if (keep_rows) res.all.push_back(row);
        }
    });

    BoundsReport report;
    report.p_max = p_max;
    bool first = true;
    for (const PerPrime& res : results) {  // ascending p: deterministic aggregation
        report.schemes_checked += res.checked;
        report.violations.insert(report.violations.end(), res.violations.begin(),
                                 res.violations.end());
        if (first || res.min_slack_row.slack < report.min_slack) {
            report.min_slack = res.min_slack_row.slack;
            report.extremal_scheme = res.min_slack_row.scheme;
        }
        if (first || res.min_limit_row.limit_slope < report.min_limit_slope) {
            report.min_limit_slope = res.min_limit_row.limit_slope;
            report.min_limit_scheme = res.min_limit_row.scheme;
        }
        first = false;
        if (keep_rows) rows->insert(rows->end(), res.all.begin(), res.all.end());
    }
    return report;
}

LemmaReport verify_lemma_behavior(std::int64_t p_max, int threads) {
    if (p_max < 2) {
        throw std::domain_error("verify_lemma_behavior: p_max must be >= 2");
    }
    std::vector<LemmaReport::PerModulus> per(static_cast<std::size_t>(p_max) - 1);
    std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> violations(per.size());

    parallel_for(per.size(), threads, [&](std::size_t idx) {
        const std::int64_t p = static_cast<std::int64_t>(idx) + 2;
        LemmaReport::PerModulus stat;
        stat.p = p;
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            const std::int64_t sum = numtheory::hj_expand(p, q).sum_terms_minus_one();
            ++stat.pairs;
            if (sum > stat.max_sum) stat.max_sum = sum;
            if (sum == p - 1) ++stat.equality_count;
            if (sum > p - 1) violations[idx].emplace_back(q, p);
        }
        per[idx] = stat;
    });

    LemmaReport report;
    report.p_max = p_max;
    report.per_modulus = std::move(per);
    for (std::size_t i = 0; i < report.per_modulus.size(); ++i) {
        report.pairs_checked += static_cast<std::uint64_t>(report.per_modulus[i].pairs);
        report.violations.insert(report.violations.end(), violations[i].begin(),
                                 violations[i].end());
    }
    return report;
}

}  // namespace slopeforge::bounds
