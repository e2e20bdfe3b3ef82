#pragma once

#include "slopeforge/rational.hpp"
#include "slopeforge/rootcover.hpp"

#include <string>
#include <vector>

namespace slopeforge::product {

// Invariants of a surface together with a distinguished line bundle
// (Gamma on the first factor, B on the second). Plain numbers; geometric
// validity (nef K, very ample B, ...) is the caller's responsibility.
struct PolarizedSurface {
    Rat c1sq;
    Rat c2;
    Rat chi;
    Rat bundle_sq;
    Rat bundle_dot_k;

    bool satisfies_noether() const { return c1sq + c2 == 12 * chi; }
};

// Invariants of the complete-intersection surface S cut out in the product
// by two general sections of the combined bundle.
struct ProductInvariants {
    Rat c1sq;
    Rat c2;
    Rat chi;
    Rat coupling;
    Rat deg_to_x;  // = B^2
    Rat deg_to_y;  // = Gamma^2
};

// c(Gamma,B) = 7/2 G²B² + 3/2 (G·K_X)B² + 3/2 (B·K_Y)G² + 1/2 (G·K_X)(B·K_Y).
Rat coupling(const PolarizedSurface& xs, const PolarizedSurface& ys);

//   c1²(S) = c1²(X)B² + c1²(Y)G² + 8c(G,B) − 4G²B²
//   c2(S)  = c2(X)B² + c2(Y)G² + 4c(G,B) + 4G²B²
//   chi(S) = chi(X)B² + chi(Y)G² + c(G,B)
ProductInvariants product_invariants(const PolarizedSurface& xs, const PolarizedSurface& ys);

// Numeric red flags only (B² <= 0, Noether violated); never throws.
std::vector<std::string> sanity_warnings(const PolarizedSurface& xs, const PolarizedSurface& ys);

// One member of the cover family with its polarization, as consumed by
// product_slope_sequence.
struct FamilyMember {
    rootcover::ChernInvariants chern;
    Int gamma_sq;
    Int gamma_dot_k;
};

// Wraps a family member as the X factor (chi from Noether on the partial
// c1²; only the Chern fields feed the slope).
PolarizedSurface polarized_from_family(const FamilyMember& member);

// Slopes c1²(S_p)/c2(S_p) for the given family against a fixed Y factor,
// in input order. c1² of the family is the partial value (residual omitted).
std::vector<Rat> product_slope_sequence(const std::vector<FamilyMember>& family,
                                        const PolarizedSurface& ys);

}  // namespace slopeforge::product
