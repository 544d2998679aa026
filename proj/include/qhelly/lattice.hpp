#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qhelly/geometry.hpp"

namespace qhelly {

using IntVec = std::vector<Integer>;

// k colinear integer points base, base+step, ..., base+(k-1)*step, all
// inside the queried body; step is primitive.
struct LatticeWitness {
    IntVec base;
    IntVec step;
    int count = 0;
};

struct IntBox {
    IntVec lo;
    IntVec hi;  // inclusive

    bool empty() const;
    Integer cell_count() const;
};

RatVec to_rational(const IntVec& v);

// Integer bounding box of the intersection. Cheap per-member boxes are
// intersected first; coordinates no member bounds fall back to support LPs
// over the joint intersection. Throws UnboundedBody, nullopt when the
// intersection is empty.
std::optional<IntBox> integer_bounding_box(int dim, std::span<const ConvexBody> bodies);

// Complete list of lattice points in the intersection, in lexicographic
// order: enumerate the bounding box, filter by exact membership.
std::vector<IntVec> integer_points(int dim, std::span<const ConvexBody> bodies);
std::vector<IntVec> integer_points(const ConvexBody& body);

// Detection via pair-gcd: k colinear lattice points exist iff two lattice
// points differ by at least k-1 primitive steps (convexity fills in the
// intermediate points). k = 1 asks for any lattice point.
std::optional<LatticeWitness> find_k_colinear(int dim, std::span<const IntVec> points, int k);
std::optional<LatticeWitness> contains_k_colinear(int dim, std::span<const ConvexBody> bodies, int k);
std::optional<LatticeWitness> contains_k_colinear(const ConvexBody& body, int k);

}  // namespace qhelly
