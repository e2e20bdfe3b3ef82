#include "slopeforge/product.hpp"

#include <stdexcept>

namespace slopeforge::product {

Rat coupling(const PolarizedSurface& xs, const PolarizedSurface& ys) {
    const Rat& g2 = xs.bundle_sq;
    const Rat& gk = xs.bundle_dot_k;
    const Rat& b2 = ys.bundle_sq;
    const Rat& bk = ys.bundle_dot_k;
    return Rat(7, 2) * g2 * b2 + Rat(3, 2) * gk * b2 + Rat(3, 2) * bk * g2 + Rat(1, 2) * gk * bk;
}

ProductInvariants product_invariants(const PolarizedSurface& xs, const PolarizedSurface& ys) {
    const Rat c = coupling(xs, ys);
    const Rat& g2 = xs.bundle_sq;
    const Rat& b2 = ys.bundle_sq;

    ProductInvariants out;
    out.coupling = c;
    out.deg_to_x = b2;
    out.deg_to_y = g2;
    out.c1sq = xs.c1sq * b2 + ys.c1sq * g2 + 8 * c - 4 * g2 * b2;
    out.c2 = xs.c2 * b2 + ys.c2 * g2 + 4 * c + 4 * g2 * b2;
    out.chi = xs.chi * b2 + ys.chi * g2 + c;
    return out;
}

std::vector<std::string> sanity_warnings(const PolarizedSurface& xs, const PolarizedSurface& ys) {
    std::vector<std::string> warnings;
    if (xs.bundle_sq <= 0)
        warnings.push_back("first factor: bundle self-intersection is not positive");
    if (ys.bundle_sq <= 0)
        warnings.push_back("second factor: bundle self-intersection is not positive");
    if (!xs.satisfies_noether())
        warnings.push_back("first factor: c1^2 + c2 != 12*chi");
    if (!ys.satisfies_noether())
        warnings.push_back("second factor: c1^2 + c2 != 12*chi");
    return warnings;
}

PolarizedSurface polarized_from_family(const FamilyMember& member) {
    PolarizedSurface s;
    s.c1sq = member.chern.c1sq_partial;
    s.c2 = Rat(member.chern.c2);
    s.chi = (s.c1sq + s.c2) / 12;  // Noether, exact in Rat
    s.bundle_sq = Rat(member.gamma_sq);
    s.bundle_dot_k = Rat(member.gamma_dot_k);
    return s;
}

std::vector<Rat> product_slope_sequence(const std::vector<FamilyMember>& family,
                                        const PolarizedSurface& ys) {
    if (family.empty())
        throw std::domain_error("product_slope_sequence: family is empty");
    std::vector<Rat> slopes;
    slopes.reserve(family.size());
    for (const FamilyMember& member : family) {
        const ProductInvariants inv = product_invariants(polarized_from_family(member), ys);
        if (inv.c2 == 0)
            throw std::domain_error("product_slope_sequence: member has c2 == 0");
        slopes.push_back(inv.c1sq / inv.c2);
    }
    return slopes;
}

}  // namespace slopeforge::product
