#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slopeforge/numtheory.hpp"

#include <numeric>
#include <random>

using namespace slopeforge;
using namespace slopeforge::numtheory;

TEST_CASE("primality helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(199));
    CHECK(is_prime(997));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));  // 7 * 13

    const auto primes = primes_up_to(30);
    CHECK(primes == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_up_to(1).empty());
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(1, 5) == 1);
    CHECK(mod_inverse(3, 7) == 5);
    CHECK_THROWS_AS(mod_inverse(0, 5), std::domain_error);
    CHECK_THROWS_AS(mod_inverse(4, 12), std::domain_error);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const std::int64_t p = 2 + static_cast<std::int64_t>(rng() % 5000);
        const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % (p - 1));
        if (std::gcd(q, p) != 1) continue;
        const std::int64_t inv = mod_inverse(q, p);
        CHECK(0 < inv);
        CHECK(inv < p);
        CHECK((q % p) * inv % p == 1);
    }
}

TEST_CASE("hj expansion basics") {
    const HJExpansion e = hj_expand(12, 5);
    CHECK(e.terms == std::vector<std::int64_t>{3, 2, 3});
    CHECK(e.length() == 3);
    CHECK(e.evaluate() == Rat(12, 5));
    CHECK(e.sum_terms_minus_one() == 5);

    CHECK(hj_expand(5, 1).terms == std::vector<std::int64_t>{5});
    CHECK(hj_expand(5, 4).terms == std::vector<std::int64_t>{2, 2, 2, 2});
    CHECK(hj_length(5, 1) == 1);
    CHECK(hj_length(5, 4) == 4);

    CHECK_THROWS_AS(hj_expand(4, 2), std::domain_error);
    CHECK_THROWS_AS(hj_expand(5, 5), std::domain_error);
    CHECK_THROWS_AS(hj_expand(5, 0), std::domain_error);
}

TEST_CASE("hj expansion properties over all coprime pairs up to 60") {
    for (std::int64_t p = 2; p <= 60; ++p) {
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            const HJExpansion e = hj_expand(p, q);
            for (std::int64_t term : e.terms) CHECK(term >= 2);
            CHECK(e.evaluate() == Rat(p, q));
        }
    }
}

TEST_CASE("dedekind sums, pinned values") {
    CHECK(dedekind_sum(3, 8) == Rat(1, 16));
    CHECK(dedekind_sum(5, 12) == Rat(-1, 72));
    CHECK(dedekind_sum(7, 10) == Rat(0));
    CHECK(dedekind_sum_hj(3, 8) == Rat(1, 16));
    CHECK(dedekind_sum_hj(5, 12) == Rat(-1, 72));
    CHECK(dedekind_sum_hj(7, 10) == Rat(0));
    CHECK(dedekind_sum(1, 3) == Rat(1, 18));
}

TEST_CASE("both dedekind routes agree on every coprime pair up to 200") {
    for (std::int64_t p = 2; p <= 200; ++p) {
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            CHECK(dedekind_sum(q, p) == dedekind_sum_hj(q, p));
        }
    }
}

TEST_CASE("dedekind reciprocity") {
    // s(q,p) + s(p,q) = -1/4 + (p/q + q/p + 1/(pq)) / 12
    std::mt19937_64 rng(11);
    int tested = 0;
    while (tested < 100) {
        const std::int64_t p = 2 + static_cast<std::int64_t>(rng() % 400);
        const std::int64_t q = 2 + static_cast<std::int64_t>(rng() % 400);
        if (p == q || std::gcd(p, q) != 1) continue;
        const std::int64_t lo = std::min(p, q), hi = std::max(p, q);
        const Rat lhs = dedekind_sum(lo % hi, hi) + dedekind_sum(hi % lo, lo);
        const Rat rhs =
            Rat(-1, 4) + (Rat(p, q) + Rat(q, p) + Rat(1, Int(p) * q)) / 12;
        CHECK(lhs == rhs);
        ++tested;
    }
}

TEST_CASE("sawtooth modulus guard") {
    CHECK_THROWS_AS(dedekind_sum(1, kMaxSawtoothModulus + 1), std::domain_error);
    // The continued-fraction route has no such cap.
    CHECK_NOTHROW(dedekind_sum_hj(1, kMaxSawtoothModulus + 2));
}

TEST_CASE("c(q,p) anchors") {
    CHECK(c_qp(1, 5) == Rat(17, 5));
    CHECK(c_qp(3, 7) == Rat(15, 7));
    for (std::int64_t p : {5LL, 7LL, 11LL, 101LL, 499LL}) {
        CHECK(c_qp(1, p) == Rat(Int(p) * p - 2 * p + 2, p));
        CHECK(c_qp(p - 1, p) == Rat(2 * p - 2, p));
        CHECK(hj_length(p, 1) == 1);
        CHECK(hj_length(p, p - 1) == p - 1);
    }
}

TEST_CASE("dedekind_record ties the pieces together") {
    const DedekindRecord rec = dedekind_record(3, 7);
    CHECK(rec.q == 3);
    CHECK(rec.p == 7);
    CHECK(rec.s == dedekind_sum(3, 7));
    CHECK(rec.l == hj_length(7, 3));
    CHECK(rec.c == 12 * rec.s + rec.l);
    CHECK(rec.q_inv == 5);
}

TEST_CASE("DedekindTable matches the scalar routines") {
    const std::int64_t p = 101;
    const DedekindTable table(p);
    CHECK(table.modulus() == p);
    for (std::int64_t q = 1; q < p; ++q) {
        CHECK(table.s(q) == dedekind_sum(q, p));
        CHECK(table.length(q) == hj_length(p, q));
        CHECK(table.inverse(q) == mod_inverse(q, p));
        CHECK(table.c(q) == c_qp(q, p));
    }
    CHECK_THROWS_AS(DedekindTable(12), std::domain_error);
}
