#pragma once

#include <span>
#include <variant>
#include <vector>

#include "qhelly/errors.hpp"
#include "qhelly/linalg.hpp"

namespace qhelly {

// One linear constraint <normal, x> <= offset.
struct HalfSpace {
    RatVec normal;
    Rational offset;

    HalfSpace(RatVec a, Rational b) : normal(std::move(a)), offset(std::move(b)) {
        if (is_zero(normal)) throw std::invalid_argument("HalfSpace: zero normal");
    }

    bool contains(const RatVec& x) const { return dot(normal, x) <= offset; }
};

// Closed convex set as a finite list of half-space constraints.
// An empty constraint list is all of R^dim.
struct HPolytope {
    int dim = 0;
    std::vector<HalfSpace> constraints;

    HPolytope() = default;
    explicit HPolytope(int d) : dim(d) {
        if (d <= 0) throw std::invalid_argument("HPolytope: dim must be positive");
    }
    HPolytope(int d, std::vector<HalfSpace> cs);

    void add(RatVec a, Rational b) { add(HalfSpace(std::move(a), std::move(b))); }
    void add(HalfSpace hs);
    // <a, x> == b as a pair of inequalities.
    void add_eq(const RatVec& a, const Rational& b);

    bool contains(const RatVec& x) const;
};

// Convex hull of a finite rational point list.
struct VBody {
    int dim = 0;
    std::vector<RatVec> points;

    VBody(int d, std::vector<RatVec> pts);
};

// Either representation; all family-level checks accept both.
struct ConvexBody {
    std::variant<HPolytope, VBody> rep;

    ConvexBody(HPolytope h) : rep(std::move(h)) {}
    ConvexBody(VBody v) : rep(std::move(v)) {}

    int dim() const;
    bool is_h() const { return std::holds_alternative<HPolytope>(rep); }
    const HPolytope& h() const { return std::get<HPolytope>(rep); }
    const VBody& v() const { return std::get<VBody>(rep); }
};

// Concatenated constraint lists; explicit ambient dimension so an empty list
// is not a silent "whole space".
HPolytope intersect(int dim, std::span<const HPolytope> bodies);
HPolytope intersect(const std::vector<HPolytope>& bodies);

// Exact membership. H-polytopes by substitution, hulls by an exact
// feasibility program for the convex coefficients.
bool member(const RatVec& point, const ConvexBody& body);
bool member(const RatVec& point, const HPolytope& body);
bool member(const RatVec& point, const VBody& body);

// Axis-aligned unit box [lo, hi]^dim helpers used all over the tests.
HPolytope box(const RatVec& lo, const RatVec& hi);

}  // namespace qhelly
