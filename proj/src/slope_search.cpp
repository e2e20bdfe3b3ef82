#include "slopeforge/slope_search.hpp"

#include "slopeforge/numtheory.hpp"
#include "slopeforge/parallel.hpp"
#include "slopeforge/rootcover.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

namespace slopeforge::slope_search {

Rat lambda_of(const Rat& x) { return rootcover::slope_limit(x); }

double solve_lambda(const Rat& r) {
    if (r <= 1)
        throw BoundaryError(
            "solve_lambda: target " + format_fraction(r) +
            " <= 1 has no finite root; lambda(x) -> 1 as x -> 0 (take alpha = 1, beta -> inf)");
    if (r >= 3)
        throw BoundaryError(
            "solve_lambda: target " + format_fraction(r) +
            " >= 3 has no finite root; lambda(x) -> 3 as x -> inf (take beta = 1, alpha -> inf)");

    // (27 - 9r) y^2 + 48(1 - r) y + 8(1 - r) = 0, y = x^2.
    const Rat a = 27 - 9 * r;
    const Rat b = 48 * (1 - r);
    const Rat c = 8 * (1 - r);
    assert(a > 0 && c < 0);  // guarantees exactly one positive root

    const double ad = to_double(a);
    const double bd = to_double(b);
    const double cd = to_double(c);
    const double disc = bd * bd - 4.0 * ad * cd;
    assert(disc > 0.0);
    const double y = (-bd + std::sqrt(disc)) / (2.0 * ad);  // -b > 0: no cancellation
    assert(y > 0.0);
    return std::sqrt(y);
}

Rat rat_from_double(double x) {
    if (!std::isfinite(x))
        throw std::domain_error("rat_from_double: input is not finite");
    if (x == 0.0)
        return Rat(0);
    int exp = 0;
    const double m = std::frexp(x, &exp);                               // x = m * 2^exp
    const auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));     // exact: |m| in [0.5,1)
    exp -= 53;
    Rat out(mant);
    if (exp >= 0)
        out *= Rat(Int(1) << exp);
    else
        out /= Rat(Int(1) << -exp);
    return out;
}

std::vector<std::pair<Int, Int>> convergents_of(const Rat& x, int max_terms) {
    if (x < 0)
        throw std::domain_error("convergents_of: negative input");
    std::vector<std::pair<Int, Int>> out;
    Int num = rat_num(x);
    Int den = rat_den(x);
    // h_i = a_i h_{i-1} + h_{i-2}, seeded with (h_{-1},h_{-2}) = (1,0).
    Int hm1 = 1, hm2 = 0, km1 = 0, km2 = 1;
    for (int i = 0; i < max_terms && den != 0; ++i) {
        const Int ai = num / den;
        const Int rem = num % den;
        const Int hi = ai * hm1 + hm2;
        const Int ki = ai * km1 + km2;
        out.emplace_back(hi, ki);
        hm2 = hm1;
        hm1 = hi;
        km2 = km1;
        km1 = ki;
        num = den;
        den = rem;
    }
    return out;
}

std::pair<Int, Int> approximate_ratio(double x_star, double tol) {
    if (!(x_star > 0))
        throw std::domain_error("approximate_ratio: x_star must be positive");
    if (!(tol > 0))
        throw std::domain_error("approximate_ratio: tol must be positive");
    const double target = to_double(lambda_of(rat_from_double(x_star)));
    for (const auto& [h, k] : convergents_of(rat_from_double(x_star))) {
        if (h == 0)
            continue;  // lambda needs a positive ratio
        const Rat lam = lambda_of(Rat(h, k));
        if (std::abs(to_double(lam) - target) <= tol)
            return {h, k};
    }
    throw std::runtime_error("approximate_ratio: convergents exhausted without reaching tol");
}

SlopeCertificate seek_slope(const Rat& r, double tol, std::int64_t witness_p, std::int64_t d) {
    if (!(tol > 0))
        throw std::domain_error("seek_slope: tol must be positive");

    SlopeCertificate cert;
    cert.target_r = r;
    cert.x_star = solve_lambda(r);  // BoundaryError for r outside (1,3)

    // Walk convergents of x*, re-checking each candidate entirely in exact
    // arithmetic against the exact target; floats never touch the certificate.
    const Rat exact_tol = rat_from_double(tol);
    bool found = false;
    for (const auto& [h, k] : convergents_of(rat_from_double(cert.x_star), 128)) {
        if (h == 0)
            continue;
        const Rat lam = lambda_of(Rat(h, k));
        const Rat err = rat_abs(lam - r);
        if (err <= exact_tol) {
            cert.alpha = h;
            cert.beta = k;
            cert.asymptotic_slope = lam;
            cert.asymptotic_error = err;
            found = true;
            break;
        }
    }
    if (!found)
        throw std::runtime_error("seek_slope: no convergent met the requested tolerance");

    rootcover::FamilyParams params;
    params.p = witness_p;
    params.alpha = static_cast<std::int64_t>(cert.alpha);
    params.beta = static_cast<std::int64_t>(cert.beta);
    params.d = d;
    params.validate(false);  // domain error on bad p or d
    const rootcover::ChernInvariants inv = rootcover::chern_invariants(params);
    cert.witness_p = witness_p;
    cert.witness_slope = inv.slope();
    cert.residual_note =
        "witness slope omits the residual (1/p)*sum(A_j^2) term of c1^2; "
        "the limit as p -> inf is unaffected";
    return cert;
}

DensityTable density_sample(std::vector<std::pair<std::int64_t, std::int64_t>> grid,
                            std::vector<std::int64_t> primes, std::int64_t d,
                            int threads) {
    if (grid.empty())
        throw std::domain_error("density_sample: empty (alpha,beta) grid");
    if (primes.empty())
        throw std::domain_error("density_sample: empty prime list");
    const std::int64_t d_eff = d == 0 ? 2 : d;

    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    DensityTable table;
    std::vector<rootcover::FamilyParams> valid;  // in (alpha, beta, p) order
    for (const auto& [alpha, beta] : grid) {
        for (const std::int64_t p : primes) {
            rootcover::FamilyParams params{p, alpha, beta, d_eff};
            try {
                params.validate(false);
            } catch (const std::domain_error& e) {
                std::ostringstream reason;
                reason << "skipped alpha=" << alpha << " beta=" << beta << " p=" << p
                       << " d=" << d_eff << ": " << e.what();
                table.skipped.push_back(reason.str());
                continue;
            }
            valid.push_back(params);
        }
    }

    table.rows.resize(valid.size());
    parallel_for(valid.size(), threads, [&](std::size_t i) {
        const rootcover::FamilyParams& params = valid[i];
        const rootcover::ChernInvariants inv = rootcover::chern_invariants(params);
        DensityRow& row = table.rows[i];
        row.alpha = params.alpha;
        row.beta = params.beta;
        row.p = params.p;
        row.d = params.d;
        row.lambda = lambda_of(Rat(params.alpha, params.beta));
        row.witness_slope = inv.slope();
        row.difference = rat_abs(row.witness_slope - row.lambda);
    });
    return table;
}

}  // namespace slopeforge::slope_search
