#pragma once

#include "slopeforge/rational.hpp"

#include <vector>

namespace slopeforge::polyfit {

// Newton divided differences f[x0..xk] for k = 0..n-1, exact. Nodes must be
// distinct; throws std::domain_error otherwise or on size mismatch.
std::vector<Rat> divided_differences(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

// Leading coefficient of the degree-`degree` polynomial through the points.
// Requires more points than the degree; every divided difference of order
// above `degree` must vanish (i.e. the data really is such a polynomial),
// else std::domain_error. Extra points beyond degree+1 are what make this a
// check rather than a fit.
Rat interpolated_leading_coefficient(const std::vector<Rat>& xs, const std::vector<Rat>& ys,
                                     std::size_t degree);

}  // namespace slopeforge::polyfit
