#include "qhelly/norms.hpp"

#include <algorithm>

#include "qhelly/vertices.hpp"

namespace qhelly {

PolytopeNorm::PolytopeNorm(int dim, std::vector<RatVec> facet_functionals, std::string name)
    : dim_(dim), functionals_(std::move(facet_functionals)), name_(std::move(name)) {
    if (dim_ <= 0) throw std::invalid_argument("PolytopeNorm: dim must be positive");
    RatMat m;
    for (const auto& f : functionals_) {
        if (static_cast<int>(f.size()) != dim_)
            throw DimensionMismatch("PolytopeNorm: functional dimension mismatch");
        if (is_zero(f)) throw std::invalid_argument("PolytopeNorm: zero functional");
        m.push_back(f);
    }
    if (rank(std::move(m)) != dim_)
        throw std::invalid_argument("PolytopeNorm: functionals do not span, ball would be unbounded");
}

PolytopeNorm PolytopeNorm::linf(int dim) {
    std::vector<RatVec> fs;
    for (int i = 0; i < dim; ++i) {
        RatVec e = zero_vec(dim);
        e[static_cast<std::size_t>(i)] = 1;
        fs.push_back(std::move(e));
    }
    return PolytopeNorm(dim, std::move(fs), "linf");
}

PolytopeNorm PolytopeNorm::l1(int dim) {
    // Sign patterns with leading +1; the mirrored half is implicit.
    std::vector<RatVec> fs;
    const int half = 1 << (dim - 1);
    for (int mask = 0; mask < half; ++mask) {
        RatVec f(static_cast<std::size_t>(dim), Rational(1));
        for (int i = 1; i < dim; ++i)
            if (mask & (1 << (i - 1))) f[static_cast<std::size_t>(i)] = -1;
        fs.push_back(std::move(f));
    }
    return PolytopeNorm(dim, std::move(fs), "l1");
}

Rational PolytopeNorm::rho(const RatVec& x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw DimensionMismatch("rho: point dimension mismatch");
    Rational best(0);
    for (const auto& f : functionals_) {
        Rational v = abs(dot(f, x));
        if (v > best) best = v;
    }
    return best;
}

HPolytope PolytopeNorm::unit_ball() const {
    HPolytope ball(dim_);
    for (const auto& f : functionals_) {
        ball.add(f, Rational(1));
        ball.add(negate(f), Rational(1));
    }
    return ball;
}

WidthCertificate v_width(int dim, std::span<const ConvexBody> bodies, const RatVec& v) {
    if (is_zero(v)) throw std::invalid_argument("v_width: zero direction");
    if (static_cast<int>(v.size()) != dim) throw DimensionMismatch("v_width: direction dimension");
    WidthCertificate cert;
    cert.direction = v;
    LPResult hi = support(dim, bodies, v, Sense::Max);
    if (hi.status == LPStatus::Infeasible) {
        cert.status = ExtentStatus::Empty;
        return cert;
    }
    if (hi.status == LPStatus::Unbounded) {
        cert.status = ExtentStatus::Unbounded;
        return cert;
    }
    LPResult lo = support(dim, bodies, v, Sense::Min);
    if (lo.status == LPStatus::Unbounded) {
        cert.status = ExtentStatus::Unbounded;
        return cert;
    }
    cert.status = ExtentStatus::Ok;
    cert.value = *hi.optimum - *lo.optimum;
    cert.max_point = *hi.witness;
    cert.min_point = *lo.witness;
    return cert;
}

WidthCertificate v_width(const HPolytope& body, const RatVec& v) {
    ConvexBody b(body);
    return v_width(body.dim, std::span<const ConvexBody>(&b, 1), v);
}

WidthCertificate rho_diameter(int dim, std::span<const ConvexBody> bodies, const PolytopeNorm& norm) {
    if (norm.dim() != dim) throw DimensionMismatch("rho_diameter: norm dimension mismatch");
    WidthCertificate best;
    best.status = ExtentStatus::Empty;
    const auto& fs = norm.functionals();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        WidthCertificate w = v_width(dim, bodies, fs[i]);
        if (w.status == ExtentStatus::Empty) return w;
        if (w.status == ExtentStatus::Unbounded) return w;
        if (best.status != ExtentStatus::Ok || w.value > best.value) {
            best = std::move(w);
            best.functional_index = static_cast<int>(i);
        }
    }
    return best;
}

WidthCertificate rho_diameter(const HPolytope& body, const PolytopeNorm& norm) {
    ConvexBody b(body);
    return rho_diameter(body.dim, std::span<const ConvexBody>(&b, 1), norm);
}

namespace {

L2Diameter l2_from_vertices(const std::vector<RatVec>& verts) {
    L2Diameter out;
    if (verts.empty()) {
        out.status = ExtentStatus::Empty;
        return out;
    }
    out.status = ExtentStatus::Ok;
    out.squared = 0;
    out.p = verts.front();
    out.q = verts.front();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            Rational sq = squared_norm(sub(verts[i], verts[j]));
            if (sq > out.squared) {
                out.squared = sq;
                out.p = verts[i];
                out.q = verts[j];
            }
        }
    }
    return out;
}

}  // namespace

L2Diameter l2_diameter_exact(const HPolytope& body) {
    L2Diameter out;
    if (!is_bounded(body)) {
        out.status = ExtentStatus::Unbounded;
        return out;
    }
    return l2_from_vertices(vertices(body));
}

L2Diameter l2_diameter_exact(int dim, std::span<const ConvexBody> bodies) {
    std::vector<HPolytope> hs;
    for (const auto& b : bodies) {
        if (!b.is_h())
            throw std::invalid_argument("l2_diameter_exact: hull members not supported here");
        hs.push_back(b.h());
    }
    return l2_diameter_exact(intersect(dim, hs));
}

NormRelationReport lp_norm_relation_check(const HPolytope& body, int p_tag) {
    NormRelationReport rep;
    rep.p = p_tag;
    const int d = body.dim;
    WidthCertificate linf = rho_diameter(body, PolytopeNorm::linf(d));
    if (!linf.ok()) throw UnboundedBody("lp_norm_relation_check: body must be bounded and nonempty");
    rep.linf_diameter = linf.value;
    if (p_tag == 1) {
        WidthCertificate l1 = rho_diameter(body, PolytopeNorm::l1(d));
        rep.lp_value = l1.value;
        rep.holds = rep.linf_diameter * d >= rep.lp_value;
    } else if (p_tag == 2) {
        L2Diameter l2 = l2_diameter_exact(body);
        rep.lp_value = l2.squared;
        // linf >= d^{-1/2} * l2  <=>  d * linf^2 >= l2^2
        rep.holds = rep.linf_diameter * rep.linf_diameter * d >= rep.lp_value;
    } else if (p_tag == 0) {
        rep.lp_value = rep.linf_diameter;
        rep.holds = true;
    } else {
        throw std::invalid_argument("lp_norm_relation_check: p must be 1, 2, or 0 (infinity)");
    }
    return rep;
}

}  // namespace qhelly
