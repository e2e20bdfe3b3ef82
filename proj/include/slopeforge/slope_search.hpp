#pragma once

#include "slopeforge/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slopeforge::slope_search {

// lambda(x) = (27x^4 + 48x^2 + 8) / (9x^4 + 48x^2 + 8), exact.
// Maps [0, inf) onto [1, 3); strictly increasing on x > 0.
Rat lambda_of(const Rat& x);

// Target slope outside (1,3): no finite preimage exists. The message names
// the limiting sequence that approaches the target instead.
class BoundaryError : public std::domain_error {
  public:
    explicit BoundaryError(const std::string& what) : std::domain_error(what) {}
};

// Unique positive root of lambda(x) = r for r in (1,3). The quadratic in
// y = x^2 has exactly one positive root there (leading coefficient 27-9r > 0,
// constant term 8(1-r) < 0); asserted, not assumed.
double solve_lambda(const Rat& r);

// Exact rational with the same value as x (binary expansion of the double).
Rat rat_from_double(double x);

// Continued-fraction convergents h/k of x, in order, up to max_terms.
// Returned pairs are coprime with k >= 1; a leading 0/1 (x < 1) is included.
std::vector<std::pair<Int, Int>> convergents_of(const Rat& x, int max_terms = 64);

// Smallest convergent alpha/beta of x_star with |lambda(alpha/beta) - lambda(x_star)| <= tol,
// zero-numerator convergents skipped. lambda at the convergent is evaluated
// exactly; the comparison target lambda(x_star) is floating point.
std::pair<Int, Int> approximate_ratio(double x_star, double tol);

struct SlopeCertificate {
    Rat target_r;
    double x_star = 0.0;
    Int alpha;
    Int beta;
    Rat asymptotic_slope;   // lambda(alpha/beta), exact
    Rat asymptotic_error;   // |asymptotic_slope - target_r|, exact
    std::int64_t witness_p = 0;
    Rat witness_slope;      // c1sq_partial / c2 at witness_p
    std::string residual_note;
};

// Full pipeline: invert lambda, pick a convergent whose exact error is within
// tol, then evaluate the finite-p witness slope at witness_p with the given d
// (default d = 2, the smallest valid choice; d only enters sub-leading terms).
// Throws BoundaryError outside (1,3), std::domain_error on bad p/d/tol.
SlopeCertificate seek_slope(const Rat& r, double tol, std::int64_t witness_p,
                            std::int64_t d = 2);

struct DensityRow {
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    std::int64_t p = 0;
    std::int64_t d = 0;
    Rat lambda;         // lambda(alpha/beta)
    Rat witness_slope;  // finite-p slope
    Rat difference;     // |witness_slope - lambda|
};

struct DensityTable {
    std::vector<DensityRow> rows;      // sorted by (alpha, beta, p)
    std::vector<std::string> skipped;  // one reason line per rejected combination
};

// Witness slopes for every (alpha,beta) x prime combination, d fixed
// (d = 0 picks the smallest valid value, 2). Invalid (p,d) pairs are skipped
// and logged, never fatal. Throws std::domain_error on an empty grid.
DensityTable density_sample(std::vector<std::pair<std::int64_t, std::int64_t>> grid,
                            std::vector<std::int64_t> primes, std::int64_t d = 0,
                            int threads = 0);

}  // namespace slopeforge::slope_search
