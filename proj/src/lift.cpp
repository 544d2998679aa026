#include "qhelly/lift.hpp"

namespace qhelly {

namespace {

RatVec pad_left(const RatVec& a, int d) {
    RatVec row = zero_vec(2 * d);
    for (int i = 0; i < d; ++i) row[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)];
    return row;
}

RatVec pad_right(const RatVec& a, int d) {
    RatVec row = zero_vec(2 * d);
    for (int i = 0; i < d; ++i) row[static_cast<std::size_t>(d + i)] = a[static_cast<std::size_t>(i)];
    return row;
}

// <a, x + s*y> <= b over (x, y)
RatVec pair_row(const RatVec& a, const Rational& s, int d) {
    RatVec row = pad_left(a, d);
    for (int i = 0; i < d; ++i) row[static_cast<std::size_t>(d + i)] = s * a[static_cast<std::size_t>(i)];
    return row;
}

}  // namespace

LiftedBody lift_width(const HPolytope& body, const RatVec& v) {
    const int d = body.dim;
    if (static_cast<int>(v.size()) != d) throw DimensionMismatch("lift_width: direction dimension");
    if (is_zero(v)) throw std::invalid_argument("lift_width: zero direction");
    HPolytope lifted(2 * d);
    for (const auto& hs : body.constraints) {
        lifted.add(pad_left(hs.normal, d), hs.offset);
        lifted.add(pair_row(hs.normal, Rational(1), d), hs.offset);
    }
    lifted.add_eq(pad_right(v, d), Rational(1));
    return LiftedBody{LiftKind::Width, d, v, 0, -1, ConvexBody(std::move(lifted))};
}

LiftedBody lift_discrete(const ConvexBody& body, int k, const RatVec& v) {
    const int d = body.dim();
    if (k < 2) throw std::invalid_argument("lift_discrete: k must be >= 2");
    if (static_cast<int>(v.size()) != d) throw DimensionMismatch("lift_discrete: direction dimension");
    const Rational span(k - 1);
    if (body.is_h()) {
        HPolytope lifted(2 * d);
        for (const auto& hs : body.h().constraints) {
            lifted.add(pad_left(hs.normal, d), hs.offset);
            lifted.add(pair_row(hs.normal, span, d), hs.offset);
        }
        return LiftedBody{LiftKind::Discrete, d, v, k, -1, ConvexBody(std::move(lifted))};
    }
    const auto& pts = body.v().points;
    std::vector<RatVec> lifted_pts;
    lifted_pts.reserve(pts.size() * pts.size());
    for (const auto& p : pts) {
        for (const auto& q : pts) {
            RatVec xy = p;
            RatVec step = scale(1 / span, sub(q, p));
            xy.insert(xy.end(), step.begin(), step.end());
            lifted_pts.push_back(std::move(xy));
        }
    }
    return LiftedBody{LiftKind::Discrete, d, v, k, -1,
                      ConvexBody(VBody(2 * d, std::move(lifted_pts)))};
}

LiftedBody lift_boundary(const HPolytope& body, const PolytopeNorm& norm, int facet_index) {
    const int d = body.dim;
    if (norm.dim() != d) throw DimensionMismatch("lift_boundary: norm dimension mismatch");
    const int pairs = static_cast<int>(norm.functionals().size());
    if (facet_index == 0 || facet_index > pairs || facet_index < -pairs)
        throw std::invalid_argument("lift_boundary: facet index out of range");
    const bool opposing = facet_index < 0;
    const RatVec& f = norm.functionals()[static_cast<std::size_t>(std::abs(facet_index) - 1)];
    RatVec facet_normal = opposing ? negate(f) : f;

    HPolytope lifted(2 * d);
    for (const auto& hs : body.constraints) {
        lifted.add(pad_left(hs.normal, d), hs.offset);
        lifted.add(pair_row(hs.normal, Rational(1), d), hs.offset);
    }
    lifted.add_eq(pad_right(facet_normal, d), Rational(1));
    for (const auto& g : norm.functionals()) {
        lifted.add(pad_right(g, d), Rational(1));
        lifted.add(pad_right(negate(g), d), Rational(1));
    }
    return LiftedBody{LiftKind::Boundary, d, facet_normal, 0, facet_index,
                      ConvexBody(std::move(lifted))};
}

RatVec flip_point(int base_dim, const RatVec& xy) {
    if (static_cast<int>(xy.size()) != 2 * base_dim)
        throw DimensionMismatch("flip_point: expected a paired point");
    RatVec out = xy;
    for (int i = 0; i < base_dim; ++i) {
        out[static_cast<std::size_t>(i)] += xy[static_cast<std::size_t>(base_dim + i)];
        out[static_cast<std::size_t>(base_dim + i)] = -xy[static_cast<std::size_t>(base_dim + i)];
    }
    return out;
}

ProductLift lift_product(const HPolytope& body, const PolytopeNorm& norm, const Rational& f_value) {
    const int d = body.dim;
    if (norm.dim() != d) throw DimensionMismatch("lift_product: norm dimension mismatch");
    const int k = norm.facet_count();
    const int pairs = k / 2;
    HPolytope poly(k * d);

    auto block_row = [&](const RatVec& a, int block) {
        RatVec row = zero_vec(k * d);
        for (int i = 0; i < d; ++i)
            row[static_cast<std::size_t>(block * d + i)] = a[static_cast<std::size_t>(i)];
        return row;
    };

    for (int block = 0; block < k; ++block)
        for (const auto& hs : body.constraints) poly.add(block_row(hs.normal, block), hs.offset);

    RatVec f = zero_vec(k * d);
    for (int p = 0; p < pairs; ++p) {
        const RatVec& vp = norm.functionals()[static_cast<std::size_t>(p)];
        for (int i = 0; i < d; ++i) {
            f[static_cast<std::size_t>((2 * p) * d + i)] = -vp[static_cast<std::size_t>(i)];
            f[static_cast<std::size_t>((2 * p + 1) * d + i)] = vp[static_cast<std::size_t>(i)];
        }
    }
    poly.add_eq(f, f_value);
    return ProductLift{d, norm, std::move(poly), std::move(f)};
}

RatVec default_discrete_direction(int dim) {
    static const long primes[] = {10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079,
                                  10091, 10093, 10099, 10103, 10111, 10133, 10139, 10141};
    if (dim <= 0 || dim > static_cast<int>(sizeof(primes) / sizeof(primes[0])))
        throw std::invalid_argument("default_discrete_direction: unsupported dimension");
    RatVec v;
    for (int i = 0; i < dim; ++i) v.push_back(rat(1, primes[i]));
    return v;
}

bool validate_discrete_direction(const RatVec& v, const Integer& box_radius) {
    const int d = static_cast<int>(v.size());
    Integer radius = box_radius;
    if (radius < 0) throw std::invalid_argument("validate_discrete_direction: negative radius");
    // Enumerate z in [-R, R]^d \ {0}; box sizes here are desk scale.
    Integer count = 1;
    for (int i = 0; i < d; ++i) count *= 2 * radius + 1;
    if (count > 2000000)
        throw std::invalid_argument("validate_discrete_direction: box too large to enumerate");
    IntVec z(static_cast<std::size_t>(d), -radius);
    for (;;) {
        bool zero = true;
        for (const auto& c : z)
            if (c != 0) zero = false;
        if (!zero) {
            Rational ip(0);
            for (int i = 0; i < d; ++i) ip += v[static_cast<std::size_t>(i)] * Rational(z[static_cast<std::size_t>(i)]);
            if (ip == 0) return false;
        }
        int c = d - 1;
        while (c >= 0) {
            if (z[static_cast<std::size_t>(c)] < radius) {
                ++z[static_cast<std::size_t>(c)];
                break;
            }
            z[static_cast<std::size_t>(c)] = -radius;
            --c;
        }
        if (c < 0) break;
    }
    return true;
}

std::optional<std::pair<IntVec, IntVec>> discrete_lift_integer_point(
    std::span<const LiftedBody> lifts) {
    if (lifts.empty()) throw std::invalid_argument("discrete_lift_integer_point: no lifts");
    const int d = lifts.front().base_dim;
    const RatVec& v = lifts.front().direction;
    std::vector<ConvexBody> bodies;
    for (const auto& l : lifts) {
        if (l.kind != LiftKind::Discrete)
            throw std::invalid_argument("discrete_lift_integer_point: expects discrete lifts");
        if (l.base_dim != d) throw DimensionMismatch("discrete_lift_integer_point: mixed dimensions");
        bodies.push_back(l.lifted);
    }
    auto pts = integer_points(2 * d, bodies);
    for (const auto& p : pts) {
        Rational ip(0);
        for (int i = 0; i < d; ++i) ip += v[static_cast<std::size_t>(i)] * Rational(p[static_cast<std::size_t>(d + i)]);
        if (ip > 0) {
            IntVec x(p.begin(), p.begin() + d);
            IntVec y(p.begin() + d, p.end());
            return std::make_pair(std::move(x), std::move(y));
        }
    }
    return std::nullopt;
}

}  // namespace qhelly
