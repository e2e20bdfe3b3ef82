#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slopeforge/bounds.hpp"

#include <algorithm>
#include <set>
#include <tuple>

using namespace slopeforge;
using namespace slopeforge::bounds;

namespace {
MultiplicityScheme ms(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t c) {
    MultiplicityScheme s;
    s.p = p;
    s.a = a;
    s.b = b;
    s.c = c;
    s.m = (1 + a + b + c) / p;
    return s;
}
}  // namespace

TEST_CASE("scheme enumeration counts") {
    const auto at5 = enumerate_schemes(5);
    CHECK(at5.size() == 13);
    CHECK(enumerate_schemes(7).size() == 31);
    CHECK(enumerate_schemes(11).size() == 91);
    CHECK_THROWS_AS(enumerate_schemes(9), std::domain_error);
    CHECK_THROWS_AS(enumerate_schemes(3), std::domain_error);

    int m1 = 0;
    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> m1_triples;
    for (const auto& s : at5) {
        CHECK(1 + s.a + s.b + s.c == s.m * 5);
        CHECK((s.m == 1 || s.m == 2));
        CHECK_NOTHROW(s.validate());
        if (s.m == 1) {
            ++m1;
            m1_triples.insert({s.a, s.b, s.c});
        }
    }
    CHECK(m1 == 3);
    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> want{
        {1, 1, 2}, {1, 2, 1}, {2, 1, 1}};
    CHECK(m1_triples == want);
}

TEST_CASE("enumeration is permutation-closed") {
    const auto schemes = enumerate_schemes(7);
    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> all;
    for (const auto& s : schemes) all.insert({s.a, s.b, s.c});
    for (const auto& s : schemes) {
        std::int64_t t[3] = {s.a, s.b, s.c};
        std::sort(t, t + 3);
        do {
            CHECK(all.count({t[0], t[1], t[2]}) == 1);
        } while (std::next_permutation(t, t + 3));
    }
}

TEST_CASE("scheme arguments and sums at pinned examples") {
    const auto args = scheme_arguments(ms(5, 1, 1, 2));
    CHECK(args == std::array<std::int64_t, 6>{4, 4, 3, 4, 3, 3});

    const SchemeSums sums = scheme_sums(ms(5, 1, 1, 2));
    CHECK(sums.S == Rat(-3, 5));
    CHECK(sums.L == 18);
    CHECK(sums.C == Rat(54, 5));
    CHECK(sums.C == 12 * sums.S + sums.L);
    CHECK(6 * sums.S + sums.L == Rat(72, 5));
    CHECK(Rat(72, 5) <= Rat(84, 5));

    const SchemeSums s713 = scheme_sums(ms(7, 1, 2, 3));
    CHECK(s713.S == Rat(-2, 7));
    CHECK(s713.L == 18);
    CHECK(s713.C == Rat(102, 7));

    // The prescribed weights a=1, b=c=p-1 at p=5.
    const SchemeSums s144 = scheme_sums(ms(5, 1, 4, 4));
    CHECK(s144.S == Rat(2, 5));
    CHECK(s144.L == 12);
    CHECK(s144.C == Rat(84, 5));
}

TEST_CASE("C = 12S + L on every scheme for small primes") {
    for (std::int64_t p : {5LL, 7LL, 11LL, 13LL}) {
        const numtheory::DedekindTable table(p);
        for (const auto& scheme : enumerate_schemes(p)) {
            const SchemeSums sums = scheme_sums(scheme, table);
            CHECK(sums.C == 12 * sums.S + sums.L);
            CHECK(scheme_sums(scheme).C == sums.C);  // table and fresh routes agree
        }
    }
}

TEST_CASE("limit slope at pinned examples and its lower bound") {
    CHECK(limit_slope_x0(ms(5, 1, 1, 2)) == Rat(41, 40));
    CHECK(limit_slope_x0(ms(7, 1, 2, 3)) == Rat(81, 70));
    CHECK(limit_slope_x0(ms(5, 1, 4, 4)) == Rat(36, 35));
    for (std::int64_t p : {5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL}) {
        for (const auto& scheme : enumerate_schemes(p)) {
            CHECK(limit_slope_x0(scheme) >= 1 - Rat(1, p));
        }
    }
}

TEST_CASE("lomaschico sweep to 50") {
    std::vector<SchemeRow> rows;
    const BoundsReport report = verify_lomaschico(50, 0, &rows);
    CHECK(report.ok());
    CHECK(report.violations.empty());
    CHECK(report.p_max == 50);
    CHECK(rows.size() == report.schemes_checked);
    CHECK(report.min_slack == Rat(12, 5));
    CHECK(report.extremal_scheme.p == 5);
    CHECK(report.extremal_scheme.a == 1);
    CHECK(report.extremal_scheme.b == 1);
    CHECK(report.extremal_scheme.c == 2);
    CHECK(report.extremal_scheme.m == 1);

    // Deterministic row order: ascending (p, m, a, b).
    const auto key = [](const SchemeRow& r) {
        return std::tuple(r.scheme.p, r.scheme.m, r.scheme.a, r.scheme.b);
    };
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(key(rows[i - 1]) < key(rows[i]));

    // Same result single-threaded.
    const BoundsReport serial = verify_lomaschico(50, 1);
    CHECK(serial.min_slack == report.min_slack);
    CHECK(serial.schemes_checked == report.schemes_checked);
    CHECK(serial.min_limit_slope == report.min_limit_slope);
}

TEST_CASE("lemma sweep") {
    const LemmaReport report = verify_lemma_behavior(50);
    CHECK(report.ok());
    CHECK(report.p_max == 50);
    CHECK(report.violations.empty());

    const auto p5 = std::find_if(report.per_modulus.begin(), report.per_modulus.end(),
                                 [](const auto& pm) { return pm.p == 5; });
    REQUIRE(p5 != report.per_modulus.end());
    CHECK(p5->pairs == 4);
    CHECK(p5->max_sum == 4);           // attained by q=1 ([5]) and q=4 ([2,2,2,2])
    CHECK(p5->equality_count == 2);

    std::uint64_t total = 0;
    for (const auto& pm : report.per_modulus) {
        CHECK(pm.max_sum <= pm.p - 1);
        total += static_cast<std::uint64_t>(pm.pairs);
    }
    CHECK(total == report.pairs_checked);
}

TEST_CASE("scheme validation rejects malformed input") {
    CHECK_THROWS_AS(ms(5, 1, 1, 1).validate(), std::domain_error);   // 1+a+b+c = 4, not mp
    CHECK_THROWS_AS(ms(5, 5, 2, 2).validate(), std::domain_error);   // a out of range
    CHECK_THROWS_AS(scheme_sums(ms(5, 1, 1, 1)), std::domain_error);
}
