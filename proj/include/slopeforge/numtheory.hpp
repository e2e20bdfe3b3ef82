#pragma once

#include "slopeforge/rational.hpp"

#include <cstdint>
#include <vector>

namespace slopeforge::numtheory {

// Largest modulus for which the sawtooth accumulator |sum| < p^3 fits int64.
inline constexpr std::int64_t kMaxSawtoothModulus = 2'000'000;

// Negative-regular (Hirzebruch-Jung) continued fraction of p/q:
//   p/q = e1 - 1/(e2 - 1/(... - 1/el)),  all ei >= 2.
struct HJExpansion {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::vector<std::int64_t> terms;

    std::int64_t length() const { return static_cast<std::int64_t>(terms.size()); }
    std::int64_t sum_terms_minus_one() const;

    // Folds the bracket back into an exact rational; equals p/q by construction.
    Rat evaluate() const;
};

// Everything attached to one coprime pair (q, p):
// s = s(q,p), l = l(q,p), c = 12s + l, q_inv = q^{-1} mod p in (0,p).
struct DedekindRecord {
    std::int64_t q = 0;
    std::int64_t p = 0;
    Rat s;
    std::int64_t l = 0;
    Rat c;
    std::int64_t q_inv = 0;
};

bool is_prime(std::int64_t n);

// All primes in [2, n], ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t n);

// Unique r in (0,p) with q*r == 1 (mod p). Requires gcd(q,p) = 1.
std::int64_t mod_inverse(std::int64_t q, std::int64_t p);

// Requires 0 < q < p, gcd(q,p) = 1. q = 1 yields the single term [p].
HJExpansion hj_expand(std::int64_t p, std::int64_t q);

std::int64_t hj_length(std::int64_t p, std::int64_t q);

// Classical sawtooth sum s(q,p) = sum_{k=1}^{p-1} ((k/p))((kq/p)), exact.
// O(p); the accumulator bound restricts p to <= 2'000'000.
Rat dedekind_sum(std::int64_t q, std::int64_t p);

// Same value through the continued fraction:
//   12 s(q,p) = (q + q^{-1})/p + sum_i (e_i - 3).
// O(l). Both routes are kept permanently as mutual oracles.
Rat dedekind_sum_hj(std::int64_t q, std::int64_t p);

// c(q,p) = 12 s(q,p) + l(q,p).
Rat c_qp(std::int64_t q, std::int64_t p);

DedekindRecord dedekind_record(std::int64_t q, std::int64_t p);

// Per-modulus tables of l(q,p), s(q,p) and q^{-1} for every q in (0,p).
// Built once per prime so that sweeps pay O(1) per lookup.
class DedekindTable {
public:
    explicit DedekindTable(std::int64_t p);

    std::int64_t modulus() const { return p_; }
    std::int64_t length(std::int64_t q) const { return length_[static_cast<std::size_t>(q)]; }
    std::int64_t inverse(std::int64_t q) const { return inverse_[static_cast<std::size_t>(q)]; }
    const Rat& s(std::int64_t q) const { return s_[static_cast<std::size_t>(q)]; }
    Rat c(std::int64_t q) const { return 12 * s(q) + length(q); }

private:
    std::int64_t p_;
    std::vector<std::int64_t> length_;
    std::vector<std::int64_t> inverse_;
    std::vector<Rat> s_;
};

}  // namespace slopeforge::numtheory
