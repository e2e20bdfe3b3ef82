#include "slopeforge/polyfit.hpp"

#include <stdexcept>
#include <string>

namespace slopeforge::polyfit {

std::vector<Rat> divided_differences(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    const std::size_t n = xs.size();
    if (n == 0 || ys.size() != n)
        throw std::domain_error("divided_differences: need equal, nonzero point counts");
    std::vector<Rat> dd = ys;
    // In-place triangle: after pass k, dd[i] = f[x_{i-k} .. x_i] for i >= k.
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = n - 1; i >= k; --i) {
            const Rat dx = xs[i] - xs[i - k];
            if (dx == 0)
                throw std::domain_error("divided_differences: repeated node");
            dd[i] = (dd[i] - dd[i - 1]) / dx;
        }
    }
    return dd;  // dd[k] = f[x0..xk]
}

Rat interpolated_leading_coefficient(const std::vector<Rat>& xs, const std::vector<Rat>& ys,
                                     std::size_t degree) {
    if (xs.size() < degree + 2)
        throw std::domain_error(
            "interpolated_leading_coefficient: need at least degree+2 points to confirm the degree");
    const std::vector<Rat> dd = divided_differences(xs, ys);
    for (std::size_t k = degree + 1; k < dd.size(); ++k) {
        if (dd[k] != 0)
            throw std::domain_error(
                "interpolated_leading_coefficient: data does not fit a degree-" +
                std::to_string(degree) + " polynomial (order-" + std::to_string(k) +
                " divided difference is nonzero)");
    }
    return dd[degree];
}

}  // namespace slopeforge::polyfit
