#pragma once

#include "slopeforge/bounds.hpp"
#include "slopeforge/numtheory.hpp"
#include "slopeforge/product.hpp"
#include "slopeforge/rootcover.hpp"
#include "slopeforge/slope_search.hpp"

#include <json.hpp>

namespace slopeforge::serialize {

using json = nlohmann::json;

// Serialization conventions, applied uniformly:
//   - machine-word parameters (p, alpha, q, ...) -> JSON numbers
//   - big integers -> decimal strings
//   - rationals -> "num/den" strings, never floats (parse_rational round-trips)
json rat_json(const Rat& value);
json int_json(const Int& value);

json json_of(const numtheory::HJExpansion& e);
json json_of(const numtheory::DedekindRecord& r);
json json_of(const rootcover::FamilyParams& params, const rootcover::ChernInvariants& inv);
json json_of(const product::ProductInvariants& inv);
json json_of(const slope_search::SlopeCertificate& cert);
json json_of(const slope_search::DensityRow& row);
json json_of(const bounds::MultiplicityScheme& scheme);
json json_of(const bounds::SchemeRow& row);
json json_of(const bounds::BoundsReport& report);
json json_of(const bounds::LemmaReport& report);

}  // namespace slopeforge::serialize
