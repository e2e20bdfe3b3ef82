#pragma once

#include "slopeforge/numtheory.hpp"
#include "slopeforge/rational.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace slopeforge::bounds {

// Generalized multiplicity weights (1, a, b, c) with 1 + a + b + c = m*p,
// m in {1,2}, all of a, b, c in (0,p), p prime >= 5.
struct MultiplicityScheme {
    std::int64_t p = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t m = 0;

    void validate() const;
};

// S, L, C over the six reduced arguments
//   -a, -b, -c, -b a^{-1}, -c a^{-1}, -c b^{-1}  (mod p, representatives in (0,p)).
// C = 12 S + L by definition.
struct SchemeSums {
    Rat S;
    std::int64_t L = 0;
    Rat C;
};

// The six arguments above, each reduced into (0,p).
std::array<std::int64_t, 6> scheme_arguments(const MultiplicityScheme& scheme);

// All ordered triples (a,b,c) with 1+a+b+c in {p, 2p}, ascending by (m,a,b).
std::vector<MultiplicityScheme> enumerate_schemes(std::int64_t p);

SchemeSums scheme_sums(const MultiplicityScheme& scheme);
SchemeSums scheme_sums(const MultiplicityScheme& scheme, const numtheory::DedekindTable& table);

// (12 - C/p) / (6 + L/p), the slope limit of the scheme as x -> 0.
Rat limit_slope_x0(const MultiplicityScheme& scheme);
Rat limit_slope_x0(const MultiplicityScheme& scheme, const SchemeSums& sums);

// One fully evaluated scheme, as reported in CSV.
struct SchemeRow {
    MultiplicityScheme scheme;
    SchemeSums sums;
    Rat six_s_plus_l;
    Rat bound;  // 3p + 3 - 6/p
    Rat slack;  // bound - (6S + L)
    Rat limit_slope;
};

// Sweep result for the bound 6S + L <= 3p + 3 - 6/p over every scheme of
// every prime 5 <= p <= p_max, plus the companion limit_slope >= 1 - 1/p.
struct BoundsReport {
    std::int64_t p_max = 0;
    std::uint64_t schemes_checked = 0;
    std::vector<SchemeRow> violations;
    Rat min_slack;
    MultiplicityScheme extremal_scheme;       // attains min_slack
    Rat min_limit_slope;
    MultiplicityScheme min_limit_scheme;      // empirical minimizer, not asserted optimal

    bool ok() const { return violations.empty(); }
};

// threads = 0 picks the default degree (SLOPEFORGE_THREADS-capped hardware
// concurrency). When rows is non-null, every evaluated SchemeRow is appended
// in deterministic (p, m, a, b) order.
BoundsReport verify_lomaschico(std::int64_t p_max, int threads = 0,
                               std::vector<SchemeRow>* rows = nullptr);

// Sweep result for sum(e_i - 1) <= p - 1 over all coprime 0 < q < p, p <= p_max
// (p not required prime).
struct LemmaReport {
    struct PerModulus {
        std::int64_t p = 0;
        std::int64_t pairs = 0;
        std::int64_t max_sum = 0;        // max over q of sum(e_i - 1)
        std::int64_t equality_count = 0; // q with sum(e_i - 1) == p - 1
    };

    std::int64_t p_max = 0;
    std::uint64_t pairs_checked = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> violations;  // (q, p)
    std::vector<PerModulus> per_modulus;

    bool ok() const { return violations.empty(); }
};

LemmaReport verify_lemma_behavior(std::int64_t p_max, int threads = 0);

}  // namespace slopeforge::bounds
