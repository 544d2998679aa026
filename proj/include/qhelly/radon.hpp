#pragma once

#include <vector>

#include "qhelly/linalg.hpp"

namespace qhelly {

struct RadonPartition {
    std::vector<RatVec> part_a;
    std::vector<RatVec> part_b;
    RatVec witness;  // lies in the hull of both parts
};

// Splits dim+2 or more points along a nonzero affine dependence; the
// witness is the common point of the two hulls, computed exactly.
RadonPartition radon_partition(const std::vector<RatVec>& points);

}  // namespace qhelly
