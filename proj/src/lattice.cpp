#include "qhelly/lattice.hpp"

#include <algorithm>

#include "qhelly/lp.hpp"

namespace qhelly {

bool IntBox::empty() const {
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (lo[i] > hi[i]) return true;
    return false;
}

Integer IntBox::cell_count() const {
    if (empty()) return 0;
    Integer n(1);
    for (std::size_t i = 0; i < lo.size(); ++i) n *= hi[i] - lo[i] + 1;
    return n;
}

RatVec to_rational(const IntVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

namespace {

struct Extent {
    bool has_lo = false, has_hi = false;
    Rational lo, hi;
};

// Per-member coordinate ranges: exact min/max over points for hulls,
// support LPs for H-members (no bound when the member is unbounded there).
std::vector<Extent> member_extents(int dim, const ConvexBody& body, bool& body_empty) {
    std::vector<Extent> ext(static_cast<std::size_t>(dim));
    body_empty = false;
    if (!body.is_h()) {
        const auto& pts = body.v().points;
        for (int c = 0; c < dim; ++c) {
            Extent& e = ext[static_cast<std::size_t>(c)];
            e.has_lo = e.has_hi = true;
            e.lo = e.hi = pts.front()[static_cast<std::size_t>(c)];
            for (const auto& p : pts) {
                const Rational& x = p[static_cast<std::size_t>(c)];
                if (x < e.lo) e.lo = x;
                if (x > e.hi) e.hi = x;
            }
        }
        return ext;
    }
    for (int c = 0; c < dim; ++c) {
        RatVec dir = zero_vec(dim);
        dir[static_cast<std::size_t>(c)] = 1;
        LPResult hi = lp_solve(dir, Sense::Max, body.h());
        if (hi.status == LPStatus::Infeasible) {
            body_empty = true;
            return ext;
        }
        LPResult lo = lp_solve(dir, Sense::Min, body.h());
        Extent& e = ext[static_cast<std::size_t>(c)];
        if (hi.optimal()) {
            e.has_hi = true;
            e.hi = *hi.optimum;
        }
        if (lo.optimal()) {
            e.has_lo = true;
            e.lo = *lo.optimum;
        }
    }
    return ext;
}

}  // namespace

std::optional<IntBox> integer_bounding_box(int dim, std::span<const ConvexBody> bodies) {
    std::vector<Extent> joint(static_cast<std::size_t>(dim));
    for (const auto& body : bodies) {
        if (body.dim() != dim) throw DimensionMismatch("integer_bounding_box: dimension mismatch");
        bool dead = false;
        auto ext = member_extents(dim, body, dead);
        if (dead) return std::nullopt;
        for (int c = 0; c < dim; ++c) {
            Extent& j = joint[static_cast<std::size_t>(c)];
            const Extent& e = ext[static_cast<std::size_t>(c)];
            if (e.has_lo && (!j.has_lo || e.lo > j.lo)) {
                j.has_lo = true;
                j.lo = e.lo;
            }
            if (e.has_hi && (!j.has_hi || e.hi < j.hi)) {
                j.has_hi = true;
                j.hi = e.hi;
            }
        }
    }
    // Coordinates left open by every single member can still be pinched by
    // the joint intersection.
    for (int c = 0; c < dim; ++c) {
        Extent& j = joint[static_cast<std::size_t>(c)];
        if (j.has_lo && j.has_hi) continue;
        RatVec dir = zero_vec(dim);
        dir[static_cast<std::size_t>(c)] = 1;
        if (!j.has_hi) {
            LPResult hi = support(dim, bodies, dir, Sense::Max);
            if (hi.status == LPStatus::Infeasible) return std::nullopt;
            if (hi.status == LPStatus::Unbounded)
                throw UnboundedBody("integer_bounding_box: intersection unbounded");
            j.has_hi = true;
            j.hi = *hi.optimum;
        }
        if (!j.has_lo) {
            LPResult lo = support(dim, bodies, dir, Sense::Min);
            if (lo.status == LPStatus::Infeasible) return std::nullopt;
            if (lo.status == LPStatus::Unbounded)
                throw UnboundedBody("integer_bounding_box: intersection unbounded");
            j.has_lo = true;
            j.lo = *lo.optimum;
        }
    }
    IntBox out;
    for (int c = 0; c < dim; ++c) {
        const Extent& j = joint[static_cast<std::size_t>(c)];
        out.lo.push_back(ceil_int(j.lo));
        out.hi.push_back(floor_int(j.hi));
    }
    return out;
}

std::vector<IntVec> integer_points(int dim, std::span<const ConvexBody> bodies) {
    std::vector<IntVec> out;
    auto bb = integer_bounding_box(dim, bodies);
    if (!bb || bb->empty()) return out;

    IntVec cur = bb->lo;
    for (;;) {
        RatVec p = to_rational(cur);
        bool inside = true;
        for (const auto& body : bodies) {
            if (!member(p, body)) {
                inside = false;
                break;
            }
        }
        if (inside) out.push_back(cur);
        // odometer over the box, last coordinate fastest
        int c = dim - 1;
        while (c >= 0) {
            if (cur[static_cast<std::size_t>(c)] < bb->hi[static_cast<std::size_t>(c)]) {
                ++cur[static_cast<std::size_t>(c)];
                break;
            }
            cur[static_cast<std::size_t>(c)] = bb->lo[static_cast<std::size_t>(c)];
            --c;
        }
        if (c < 0) break;
    }
    return out;
}

std::vector<IntVec> integer_points(const ConvexBody& body) {
    return integer_points(body.dim(), std::span<const ConvexBody>(&body, 1));
}

std::optional<LatticeWitness> find_k_colinear(int dim, std::span<const IntVec> points, int k) {
    if (k < 1) throw std::invalid_argument("find_k_colinear: k must be >= 1");
    if (points.empty()) return std::nullopt;
    if (k == 1) {
        IntVec step(static_cast<std::size_t>(dim), Integer(0));
        step[0] = 1;
        return LatticeWitness{points.front(), std::move(step), 1};
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            IntVec diff(static_cast<std::size_t>(dim));
            Integer g(0);
            for (int c = 0; c < dim; ++c) {
                diff[static_cast<std::size_t>(c)] =
                    points[j][static_cast<std::size_t>(c)] - points[i][static_cast<std::size_t>(c)];
                Integer a = abs(diff[static_cast<std::size_t>(c)]);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
            }
            if (g >= k - 1) {
                IntVec step(static_cast<std::size_t>(dim));
                for (int c = 0; c < dim; ++c) step[static_cast<std::size_t>(c)] = diff[static_cast<std::size_t>(c)] / g;
                return LatticeWitness{points[i], std::move(step), k};
            }
        }
    }
    return std::nullopt;
}

std::optional<LatticeWitness> contains_k_colinear(int dim, std::span<const ConvexBody> bodies, int k) {
    auto pts = integer_points(dim, bodies);
    return find_k_colinear(dim, pts, k);
}

std::optional<LatticeWitness> contains_k_colinear(const ConvexBody& body, int k) {
    return contains_k_colinear(body.dim(), std::span<const ConvexBody>(&body, 1), k);
}

}  // namespace qhelly
