#include "slopeforge/numtheory.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace slopeforge::numtheory {

namespace {

void require_coprime_pair(const char* who, std::int64_t q, std::int64_t p) {
    if (!(0 < q && q < p)) {
        throw std::domain_error(std::string(who) + ": need 0 < q < p, got q=" +
                                std::to_string(q) + ", p=" + std::to_string(p));
    }
    if (std::gcd(q, p) != 1) {
        throw std::domain_error(std::string(who) + ": q and p must be coprime, got q=" +
                                std::to_string(q) + ", p=" + std::to_string(p));
    }
}

}  // namespace

std::int64_t HJExpansion::sum_terms_minus_one() const {
    std::int64_t acc = 0;
    for (std::int64_t e : terms) acc += e - 1;
    return acc;
}

Rat HJExpansion::evaluate() const {
    Rat value = terms.back();
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
        value = *it - 1 / value;
    }
    return value;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::int64_t i = 2; i <= n; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= n; j += i) {
            composite[static_cast<std::size_t>(j)] = true;
        }
    }
    return out;
}

std::int64_t mod_inverse(std::int64_t q, std::int64_t p) {
    if (p < 2 || q % p == 0) {
        throw std::domain_error("mod_inverse: q must be nonzero modulo p, got q=" +
                                std::to_string(q) + ", p=" + std::to_string(p));
    }
    // Extended Euclid on (q mod p, p).
    std::int64_t a = ((q % p) + p) % p;
    std::int64_t old_r = a, r = p;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t k = old_r / r;
        old_r = std::exchange(r, old_r - k * r);
        old_s = std::exchange(s, old_s - k * s);
    }
    if (old_r != 1) {
        throw std::domain_error("mod_inverse: q is not invertible modulo p, got q=" +
                                std::to_string(q) + ", p=" + std::to_string(p));
    }
    return ((old_s % p) + p) % p;
}

HJExpansion hj_expand(std::int64_t p, std::int64_t q) {
    require_coprime_pair("hj_expand", q, p);
    HJExpansion out;
    out.p = p;
    out.q = q;
    // Peel e = ceil(p/q); the remainder pair (q, e q - p) stays coprime.
    std::int64_t a = p, b = q;
    while (true) {
        const std::int64_t e = (a + b - 1) / b;
        out.terms.push_back(e);
        const std::int64_t r = e * b - a;
        if (r == 0) break;  // b was 1, bracket closed
        a = b;
        b = r;
    }
    return out;
}

std::int64_t hj_length(std::int64_t p, std::int64_t q) {
    return hj_expand(p, q).length();
}

Rat dedekind_sum(std::int64_t q, std::int64_t p) {
    require_coprime_pair("dedekind_sum", q, p);
    if (p > kMaxSawtoothModulus) {
        throw std::domain_error("dedekind_sum: p=" + std::to_string(p) +
                                " exceeds the sawtooth accumulator bound " +
                                std::to_string(kMaxSawtoothModulus));
    }
    // ((k/p)) = (2k-p)/(2p) for 0 < k < p, so
    //   s(q,p) = sum_k (2k-p)(2(kq mod p)-p) / (4p^2),  |sum| < p^3.
    std::int64_t acc = 0;
    std::int64_t m = 0;  // kq mod p
    for (std::int64_t k = 1; k < p; ++k) {
        m += q;
        if (m >= p) m -= p;
        acc += (2 * k - p) * (2 * m - p);
    }
    return Rat(Int(acc), Int(4) * p * p);
}

Rat dedekind_sum_hj(std::int64_t q, std::int64_t p) {
    require_coprime_pair("dedekind_sum_hj", q, p);
    const HJExpansion hj = hj_expand(p, q);
    const std::int64_t q_inv = mod_inverse(q, p);
    std::int64_t sum_e_minus_3 = 0;
    for (std::int64_t e : hj.terms) sum_e_minus_3 += e - 3;
    // 12 s = (q + q^{-1})/p + sum (e_i - 3)
    return Rat(Int(q) + q_inv + Int(p) * sum_e_minus_3, Int(12) * p);
}

Rat c_qp(std::int64_t q, std::int64_t p) {
    const HJExpansion hj = hj_expand(p, q);
    const std::int64_t q_inv = mod_inverse(q, p);
    std::int64_t sum_e_minus_3 = 0;
    for (std::int64_t e : hj.terms) sum_e_minus_3 += e - 3;
    return Rat(Int(q) + q_inv + Int(p) * sum_e_minus_3, p) + hj.length();
}

DedekindRecord dedekind_record(std::int64_t q, std::int64_t p) {
    DedekindRecord rec;
    rec.q = q;
    rec.p = p;
    const HJExpansion hj = hj_expand(p, q);
    rec.l = hj.length();
    rec.q_inv = mod_inverse(q, p);
    std::int64_t sum_e_minus_3 = 0;
    for (std::int64_t e : hj.terms) sum_e_minus_3 += e - 3;
    rec.s = Rat(Int(q) + rec.q_inv + Int(p) * sum_e_minus_3, Int(12) * p);
    rec.c = 12 * rec.s + rec.l;
    return rec;
}

DedekindTable::DedekindTable(std::int64_t p) : p_(p) {
    if (!is_prime(p) || p < 3) {
        throw std::domain_error("DedekindTable: p must be an odd prime, got " +
                                std::to_string(p));
    }
    const auto n = static_cast<std::size_t>(p);
    length_.assign(n, 0);
    inverse_.assign(n, 0);
    s_.assign(n, Rat());
    inverse_[1] = 1;
    for (std::int64_t i = 2; i < p; ++i) {
        // inv[i] = -(p/i) * inv[p mod i] mod p
        inverse_[static_cast<std::size_t>(i)] =
            ((p - p / i) * inverse_[static_cast<std::size_t>(p % i)]) % p;
    }
    for (std::int64_t q = 1; q < p; ++q) {
        const HJExpansion hj = hj_expand(p, q);
        length_[static_cast<std::size_t>(q)] = hj.length();
        std::int64_t sum_e_minus_3 = 0;
        for (std::int64_t e : hj.terms) sum_e_minus_3 += e - 3;
        s_[static_cast<std::size_t>(q)] =
            Rat(Int(q) + inverse_[static_cast<std::size_t>(q)] + Int(p) * sum_e_minus_3,
                Int(12) * p);
    }
}

}  // namespace slopeforge::numtheory
