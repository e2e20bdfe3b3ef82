#include "slopeforge/rootcover.hpp"

#include "slopeforge/numtheory.hpp"

#include <stdexcept>
#include <string>

namespace slopeforge::rootcover {

void FamilyParams::validate(bool formal) const {
    if (alpha < 1 || beta < 1) {
        throw std::domain_error("FamilyParams: alpha and beta must be positive, got alpha=" +
                                std::to_string(alpha) + ", beta=" + std::to_string(beta));
    }
    if (d < 1) {
        throw std::domain_error("FamilyParams: d must be positive, got d=" + std::to_string(d));
    }
    if (formal) {
        if (p < 1) {
            throw std::domain_error("FamilyParams: p must be positive, got p=" +
                                    std::to_string(p));
        }
        return;
    }
    if (p < 5 || !numtheory::is_prime(p)) {
        throw std::domain_error("FamilyParams: p must be a prime >= 5, got p=" +
                                std::to_string(p));
    }
    if (!(3 <= 2 * d && 2 * d <= p)) {
        throw std::domain_error("FamilyParams: need 3 <= 2d <= p, got d=" + std::to_string(d) +
                                ", p=" + std::to_string(p));
    }
}

Rat ChernInvariants::c1sq_total() const {
    if (!residual_A_sq) {
        throw std::domain_error("ChernInvariants: residual sum of A_j^2 was not supplied");
    }
    return c1sq_partial + Rat(*residual_A_sq, Int(p));
}

Rat ChernInvariants::slope() const {
    if (c2 <= 0) {
        throw std::domain_error("ChernInvariants: slope undefined, c2 <= 0");
    }
    return c1sq_partial / Rat(c2);
}

TwoPointCounts two_point_counts(const FamilyParams& params, bool formal) {
    params.validate(formal);
    const Int p = params.p, a = params.alpha, b = params.beta, d = params.d;
    const Int p2 = p * p;
    const Int p4 = p2 * p2;
    const Int a2 = a * a, b2 = b * b;
    const Int b4 = b2 * b2;
    TwoPointCounts out;
    out.t2 = 108 * a2 * b2 * p4 + 18 * b4 * p4 + 72 * d * a2 * p2 - 25 * d +
             24 * d * b2 * p2 + 2 * d * d;
    out.t21 = 6 * b4 * p4 + 36 * a2 * b2 * p4 + 36 * d * a2 * p2 - 13 * d +
              12 * d * b2 * p2 + d * d;
    out.t22 = 12 * b4 * p4 + 72 * a2 * b2 * p4 + 36 * d * a2 * p2 - 12 * d +
              12 * d * b2 * p2 + d * d;
    return out;
}

std::pair<Int, Int> log_chern(const FamilyParams& params, bool formal) {
    const TwoPointCounts t = two_point_counts(params, formal);
    const Int n{params.n()};
    const Int n4 = n * n * n * n;  // divisible by 81, so n4/3 is exact
    const Int d{params.d};
    return {n4 + 2 * t.t2 - 10 * d - 48, n4 / 3 + t.t2 - 4 * d - 12};
}

ChernInvariants chern_invariants(const FamilyParams& params, std::optional<Int> residual_A_sq,
                                 bool formal) {
    const TwoPointCounts t = two_point_counts(params, formal);
    const auto [log_c1sq, log_c2] = log_chern(params, formal);
    const Int p{params.p};

    ChernInvariants out;
    out.p = params.p;
    out.formal = formal;
    out.log_c1sq = log_c1sq;
    out.log_c2 = log_c2;
    out.genus_sum = -(12 + 2 * Int(params.d));
    out.residual_A_sq = residual_A_sq;

    const Int correction = t.t2 + 2 * out.genus_sum;
    out.c2 = p * log_c2 - correction + (p - 1) * t.t21 + t.t22;

    // sum c(q,p) Ai.Aj over the 2-points collapses onto the two closed forms
    // c(p-1,p) = (2p-2)/p and c(1,p) = (p^2-2p+2)/p.
    const Rat dedekind_correction =
        Rat(2 * p - 2, p) * t.t21 + Rat(p * p - 2 * p + 2, p) * t.t22;
    out.c1sq_partial = Rat(p * log_c1sq - 2 * correction) - dedekind_correction;
    return out;
}

std::pair<Int, Int> leading_coefficients(std::int64_t alpha, std::int64_t beta) {
    if (alpha < 1 || beta < 1) {
        throw std::domain_error("leading_coefficients: alpha and beta must be positive");
    }
    const Int a2 = Int(alpha) * alpha, b2 = Int(beta) * beta;
    const Int a4 = a2 * a2, b4 = b2 * b2;
    const Int cross = 144 * a2 * b2 + 24 * b4;
    return {81 * a4 + cross, 27 * a4 + cross};
}

Rat slope_limit(const Rat& x) {
    if (x < 0) {
        throw std::domain_error("slope_limit: x must be nonnegative");
    }
    const Rat x2 = x * x;
    const Rat x4 = x2 * x2;
    return (27 * x4 + 48 * x2 + 8) / (9 * x4 + 48 * x2 + 8);
}

Rat slope_limit_infinity() { return Rat(3); }

std::pair<Int, Int> gamma_invariants(const FamilyParams& params) {
    params.validate();
    const Int p{params.p};
    const Int gamma_sq = p;
    const Int gamma_dot_k =
        -3 * p + (p - 1) * (2 * Int(params.d) + 36 * Int(params.alpha) * params.alpha * p * p -
                            12 + 12 * Int(params.beta) * params.beta * p * p);
    return {gamma_sq, gamma_dot_k};
}

}  // namespace slopeforge::rootcover
