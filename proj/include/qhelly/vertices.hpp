#pragma once

#include <vector>

#include "qhelly/geometry.hpp"

namespace qhelly {

// True when every coordinate is bounded in both directions (empty counts
// as bounded).
bool is_bounded(const HPolytope& body);

// Exact vertex set by enumeration of dim-subsets of constraints, sorted
// lexicographically and deduplicated. Intended for small dimensions.
// Throws UnboundedBody; an empty polytope yields an empty list.
std::vector<RatVec> vertices(const HPolytope& body);

}  // namespace qhelly
