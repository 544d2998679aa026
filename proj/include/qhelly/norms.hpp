#pragma once

#include <span>
#include <string>
#include <vector>

#include "qhelly/geometry.hpp"
#include "qhelly/lp.hpp"

namespace qhelly {

// Centrally symmetric polytope unit ball {x : |<x, v_i>| <= 1 for all i},
// one functional per opposing facet pair. The functionals must span, so
// the ball is bounded and the gauge is a genuine norm.
class PolytopeNorm {
  public:
    PolytopeNorm(int dim, std::vector<RatVec> facet_functionals, std::string name = "custom");

    static PolytopeNorm linf(int dim);
    static PolytopeNorm l1(int dim);

    int dim() const { return dim_; }
    int facet_count() const { return 2 * static_cast<int>(functionals_.size()); }
    const std::vector<RatVec>& functionals() const { return functionals_; }
    const std::string& name() const { return name_; }

    Rational rho(const RatVec& x) const;
    HPolytope unit_ball() const;

  private:
    int dim_;
    std::vector<RatVec> functionals_;
    std::string name_;
};

enum class ExtentStatus { Ok, Empty, Unbounded };

// max <x - y, direction> over pairs of points of a body, with the pair
// attaining it.
struct WidthCertificate {
    ExtentStatus status = ExtentStatus::Empty;
    Rational value;
    RatVec max_point;
    RatVec min_point;
    RatVec direction;
    int functional_index = -1;  // set by rho_diameter

    bool ok() const { return status == ExtentStatus::Ok; }
};

WidthCertificate v_width(int dim, std::span<const ConvexBody> bodies, const RatVec& v);
WidthCertificate v_width(const HPolytope& body, const RatVec& v);

// Diameter in the polytope norm: the largest facet-functional width.
WidthCertificate rho_diameter(int dim, std::span<const ConvexBody> bodies, const PolytopeNorm& norm);
WidthCertificate rho_diameter(const HPolytope& body, const PolytopeNorm& norm);

// Euclidean diameter is attained at a vertex pair; carried as an exact
// squared value so no roots are ever taken.
struct L2Diameter {
    ExtentStatus status = ExtentStatus::Empty;
    Rational squared;
    RatVec p;
    RatVec q;

    bool ok() const { return status == ExtentStatus::Ok; }
};

L2Diameter l2_diameter_exact(const HPolytope& body);
L2Diameter l2_diameter_exact(int dim, std::span<const ConvexBody> bodies);

// Checks linf-diam >= d^{-1/p} * lp-diam on one bounded instance
// (p in {1, 2, inf}; the p=2 comparison runs on squared values).
struct NormRelationReport {
    int p;  // 1, 2, or 0 meaning infinity
    Rational linf_diameter;
    Rational lp_value;  // diameter for p=1/inf, squared diameter for p=2
    bool holds;
};

NormRelationReport lp_norm_relation_check(const HPolytope& body, int p_tag);

}  // namespace qhelly
