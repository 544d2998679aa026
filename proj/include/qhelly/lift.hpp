#pragma once

#include <optional>
#include <span>
#include <utility>

#include "qhelly/lattice.hpp"
#include "qhelly/norms.hpp"

namespace qhelly {

enum class LiftKind { Width, Discrete, Boundary };

// Auxiliary convex set over paired variables (x, y) in R^{2d} whose
// nonemptiness or lattice points encode a width or colinear-points
// property of the base body.
struct LiftedBody {
    LiftKind kind;
    int base_dim = 0;
    RatVec direction;     // width/discrete direction
    int k = 0;            // progression length (discrete lifts)
    int facet_index = -1; // boundary lifts
    ConvexBody lifted;

    int lifted_dim() const { return 2 * base_dim; }
};

// {(x,y) : x in K, x+y in K, <y,v> = 1}; nonempty iff the v-width of K
// is at least 1.
LiftedBody lift_width(const HPolytope& body, const RatVec& v);

// {(x,y) : x in K, x+(k-1)y in K}. The strict side condition <v,y> > 0 is
// applied at the lattice layer where it is an exact test on integer
// candidates. Hull bases stay hulls: the lift is the linear image of K x K
// under (p,q) -> (p, (q-p)/(k-1)).
LiftedBody lift_discrete(const ConvexBody& body, int k, const RatVec& v);

// Slice of the unit-step lift over facet `facet_index` of the norm ball:
// x in K, x+y in K, <y, v_i> = 1, |<y, v_j>| <= 1 for all j. Negative
// indices i in [-k/2, -1] address the opposing facet -v_{|i|}.
LiftedBody lift_boundary(const HPolytope& body, const PolytopeNorm& norm, int facet_index);

// (x, y) -> (x+y, -y); maps the facet-i slice onto the opposing slice.
RatVec flip_point(int base_dim, const RatVec& xy);

// k copies of K over blocks (x_1, y_1, ..., x_{k/2}, y_{k/2}) with the
// affine constraint f(.) = sum_i <y_i - x_i, v_i> pinned to f_value.
struct ProductLift {
    int base_dim = 0;
    PolytopeNorm norm;
    HPolytope poly;     // in R^{k*d}
    RatVec f_coeffs;    // f as a linear functional on the block variables
};

ProductLift lift_product(const HPolytope& body, const PolytopeNorm& norm,
                         const Rational& f_value = Rational(1));

// Direction whose inner product with any nonzero integer vector of the
// box is nonzero; reciprocal large primes make this hold for every box
// the toolkit enumerates.
RatVec default_discrete_direction(int dim);
bool validate_discrete_direction(const RatVec& v, const Integer& box_radius);

// Integer point (x, y) with <v,y> > 0 in the intersection of discrete
// lifts; certifies the k colinear points x, x+y, ..., x+(k-1)y in every
// base body.
std::optional<std::pair<IntVec, IntVec>> discrete_lift_integer_point(
    std::span<const LiftedBody> lifts);

}  // namespace qhelly
