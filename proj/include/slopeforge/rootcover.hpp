#pragma once

#include "slopeforge/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace slopeforge::rootcover {

// Parameters of one surface in the built-in family of p-th root covers.
// The defining data: a prime p >= 5, curve multiplicity weights alpha, beta,
// and 2d general lines with 3 <= 2d <= p. Derived: n = 3*alpha*p.
struct FamilyParams {
    std::int64_t p = 0;
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    std::int64_t d = 0;

    std::int64_t n() const { return 3 * alpha * p; }

    // Throws std::domain_error on violation. Formal mode keeps only
    // positivity so the closed forms can be evaluated off-domain
    // (interpolation grids); such results are labeled formal.
    void validate(bool formal = false) const;
};

// Counts of the 2-points of the branch arrangement, split by the local
// singularity type: t21 for 1/p(1,p-1), t22 for 1/p(1,1). t21 + t22 = t2.
struct TwoPointCounts {
    Int t2;
    Int t21;
    Int t22;
};

// Chern data of the cover. c2 is exact; c1sq_partial omits the residual
// (1/p) * sum_j A_j^2, which is not derivable from the closed forms here and
// enters only through the optional residual_A_sq input.
struct ChernInvariants {
    std::int64_t p = 0;
    Int c2;
    Rat c1sq_partial;
    std::optional<Int> residual_A_sq;
    Int genus_sum;  // sum_j (g(A_j) - 1) = -(12 + 2d)
    Int log_c1sq;
    Int log_c2;
    bool formal = false;

    bool residual_omitted() const { return !residual_A_sq.has_value(); }

    // c1sq_partial + residual/p; requires the residual to be present.
    Rat c1sq_total() const;

    // c1sq_partial / c2 (the quantity whose limit is lambda(alpha/beta)).
    Rat slope() const;
};

TwoPointCounts two_point_counts(const FamilyParams& params, bool formal = false);

// (log c1^2, log c2) of the pair (surface, branch arrangement).
std::pair<Int, Int> log_chern(const FamilyParams& params, bool formal = false);

ChernInvariants chern_invariants(const FamilyParams& params,
                                 std::optional<Int> residual_A_sq = std::nullopt,
                                 bool formal = false);

// Degree-5 coefficients of (c1^2, c2) as polynomials in p:
//   (81 a^4 + 144 a^2 b^2 + 24 b^4, 27 a^4 + 144 a^2 b^2 + 24 b^4).
std::pair<Int, Int> leading_coefficients(std::int64_t alpha, std::int64_t beta);

// lambda(x) = (27x^4 + 48x^2 + 8) / (9x^4 + 48x^2 + 8), the limit slope at
// x = alpha/beta. Strictly increasing, lambda([0,inf)) = [1,3).
Rat slope_limit(const Rat& x);

// The x -> infinity limit of lambda, as a documented query.
Rat slope_limit_infinity();

// (Gamma^2, Gamma . K) of the polarizing line bundle:
//   Gamma^2 = p,
//   Gamma . K = -3p + (p-1)(2d + 36 alpha^2 p^2 - 12 + 12 beta^2 p^2).
std::pair<Int, Int> gamma_invariants(const FamilyParams& params);

}  // namespace slopeforge::rootcover
