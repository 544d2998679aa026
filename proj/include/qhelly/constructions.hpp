#pragma once

#include <cstdint>

#include "qhelly/engine.hpp"

namespace qhelly {

// Every generator verifies its own output before returning it; a family
// that fails verification is never emitted.

struct MinkowskiTightReport {
    Rational theta;                    // final tilt parameter
    Rational full_diameter;            // exact rho-diameter of the whole intersection
    std::uint64_t subsets_checked = 0; // all (kd-1)-subsets
    std::uint64_t unbounded_subsets = 0;
    Rational min_subset_diameter;      // smallest bounded subset diameter (must exceed 2)
    bool ok = false;
};

struct MinkowskiTight {
    Family family;  // kd half-spaces, d per facet of the norm ball
    MinkowskiTightReport report;
};

// Half-space family showing the subset size kd cannot be lowered: every
// (kd-1)-subset has rho-diameter strictly above 2 while the full
// intersection stays within the unit ball (diameter exactly 2). Boundary
// hyperplanes pass through a relative-interior point of each facet, tilted
// by theta along a tangent fan; theta halves until all checks pass.
MinkowskiTight gen_minkowski_tight(const PolytopeNorm& norm);

struct DiscreteTightReport {
    std::uint64_t subsets_checked = 0;
    bool leave_one_out_all_have_three_colinear = false;
    bool full_has_three_colinear = true;
    std::vector<IntVec> full_lattice_points;  // must be exactly {1,2}^d
    bool ok = false;
};

struct DiscreteTight {
    Family family;  // d*2^d hulls conv(Q u R \ {x})
    DiscreteTightReport report;
};

// Hull family over the integer points of [0,3]^d off the (d-2)-skeleton:
// any d*2^d - 1 members share 3 colinear integer points, the full
// intersection keeps only {1,2}^d which has none.
DiscreteTight gen_discrete_tight(int d);

struct NonpolytopeDemoReport {
    double s_n_estimate = 0;   // smallest diameter over n-tuples of disk tangents
    double epsilon = 0;
    Rational scale;            // rational divisor sigma actually applied
    std::uint64_t subsets_checked = 0;
    std::uint64_t unbounded_subsets = 0;
    Rational min_subset_sq;    // smallest bounded subset squared diameter (>= 1)
    Rational full_sq;          // squared diameter of the full intersection (< 1)
    bool ok = false;
};

struct NonpolytopeDemo {
    Family family;  // m_gon tangent half-planes of the disk, scaled by 1/sigma
    NonpolytopeDemoReport report;
};

// Euclidean-disk demonstration (d = 2) that no exact subset size works for
// a smooth ball: every n-subset of the emitted family reaches diameter 1,
// the full intersection stays strictly below 1. The minimum s_n is located
// numerically; the emitted half-planes are exactly-unit rational directions
// so all family checks are exact.
NonpolytopeDemo gen_nonpolytope_demo(int n, int m_gon, std::uint64_t seed = 0);

}  // namespace qhelly
