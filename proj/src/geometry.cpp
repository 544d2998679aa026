#include "qhelly/geometry.hpp"

#include "qhelly/lp.hpp"

namespace qhelly {

HPolytope::HPolytope(int d, std::vector<HalfSpace> cs) : HPolytope(d) {
    for (auto& hs : cs) add(std::move(hs));
}

void HPolytope::add(HalfSpace hs) {
    if (static_cast<int>(hs.normal.size()) != dim)
        throw DimensionMismatch("HPolytope: constraint dimension mismatch");
    constraints.push_back(std::move(hs));
}

void HPolytope::add_eq(const RatVec& a, const Rational& b) {
    add(a, b);
    add(negate(a), -b);
}

bool HPolytope::contains(const RatVec& x) const {
    if (static_cast<int>(x.size()) != dim)
        throw DimensionMismatch("HPolytope::contains: point dimension mismatch");
    for (const auto& hs : constraints)
        if (!hs.contains(x)) return false;
    return true;
}

VBody::VBody(int d, std::vector<RatVec> pts) : dim(d), points(std::move(pts)) {
    if (d <= 0) throw std::invalid_argument("VBody: dim must be positive");
    if (points.empty()) throw std::invalid_argument("VBody: needs at least one point");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw DimensionMismatch("VBody: point dimension mismatch");
}

int ConvexBody::dim() const {
    return is_h() ? h().dim : v().dim;
}

HPolytope intersect(int dim, std::span<const HPolytope> bodies) {
    HPolytope out(dim);
    for (const auto& b : bodies) {
        if (b.dim != dim) throw DimensionMismatch("intersect: mixed dimensions");
        for (const auto& hs : b.constraints) out.add(hs);
    }
    return out;
}

HPolytope intersect(const std::vector<HPolytope>& bodies) {
    if (bodies.empty())
        throw std::invalid_argument("intersect: empty list needs an explicit ambient dimension");
    return intersect(bodies.front().dim, std::span<const HPolytope>(bodies));
}

bool member(const RatVec& point, const HPolytope& body) {
    return body.contains(point);
}

bool member(const RatVec& point, const VBody& body) {
    if (static_cast<int>(point.size()) != body.dim)
        throw DimensionMismatch("member: point dimension mismatch");
    // lambda >= 0, sum lambda = 1, sum lambda_i p_i = point
    LinearProgram lp;
    lp.add_vars(static_cast<int>(body.points.size()), true);
    for (int c = 0; c < body.dim; ++c) {
        RatVec row(body.points.size());
        for (std::size_t i = 0; i < body.points.size(); ++i)
            row[i] = body.points[i][static_cast<std::size_t>(c)];
        lp.add_eq(std::move(row), point[static_cast<std::size_t>(c)]);
    }
    lp.add_eq(RatVec(body.points.size(), Rational(1)), Rational(1));
    return lp.feasible_point().optimal();
}

bool member(const RatVec& point, const ConvexBody& body) {
    return body.is_h() ? member(point, body.h()) : member(point, body.v());
}

HPolytope box(const RatVec& lo, const RatVec& hi) {
    if (lo.size() != hi.size()) throw DimensionMismatch("box: corner dimension mismatch");
    const int d = static_cast<int>(lo.size());
    HPolytope out(d);
    for (int i = 0; i < d; ++i) {
        RatVec e = zero_vec(d);
        e[static_cast<std::size_t>(i)] = 1;
        out.add(e, hi[static_cast<std::size_t>(i)]);
        e[static_cast<std::size_t>(i)] = -1;
        out.add(e, -lo[static_cast<std::size_t>(i)]);
    }
    return out;
}

}  // namespace qhelly
