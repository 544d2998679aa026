#include "qhelly/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qhelly/lp.hpp"
#include "qhelly/vertices.hpp"

namespace qhelly {

// ---------------------------------------------------------------------------
// Minkowski tightness
// ---------------------------------------------------------------------------

namespace {

struct FacetData {
    RatVec normal;    // outward functional, facet hyperplane <x, normal> = 1
    RatVec point;     // relative-interior representative (vertex centroid)
    std::vector<RatVec> fan;  // d tangent directions positively spanning the facet plane
};

std::vector<FacetData> facet_data(const PolytopeNorm& norm) {
    const int d = norm.dim();
    auto ball_vertices = vertices(norm.unit_ball());
    std::vector<FacetData> facets;
    std::vector<RatVec> normals;
    for (const auto& f : norm.functionals()) normals.push_back(f);
    for (const auto& f : norm.functionals()) normals.push_back(negate(f));
    for (const auto& nrm : normals) {
        FacetData fd;
        fd.normal = nrm;
        RatVec centroid = zero_vec(d);
        long count = 0;
        for (const auto& v : ball_vertices) {
            if (dot(v, nrm) == 1) {
                centroid = add(centroid, v);
                ++count;
            }
        }
        if (count == 0)
            throw std::invalid_argument("gen_minkowski_tight: functional is not a facet");
        fd.point = scale(rat(1, count), centroid);
        auto basis = orthogonal_complement_basis(nrm);
        RatVec last = zero_vec(d);
        for (const auto& t : basis) last = sub(last, t);
        fd.fan = basis;
        fd.fan.push_back(last);
        facets.push_back(std::move(fd));
    }
    return facets;
}

// The three per-facet requirements, each decided exactly.
bool facet_halfspaces_ok(const FacetData& fd, const std::vector<HalfSpace>& planes,
                         const std::vector<FacetData>& all, int d) {
    // (1) every other facet representative stays inside each half-space
    for (const auto& other : all) {
        if (other.point == fd.point) continue;
        for (const auto& hs : planes)
            if (!hs.contains(other.point)) return false;
    }
    // (2) on the facet hyperplane the half-spaces pin exactly the point:
    // every tangent coordinate is forced to its value at the point
    {
        HPolytope slice(d);
        for (const auto& hs : planes) slice.add(hs);
        slice.add_eq(fd.normal, Rational(1));
        for (const auto& t : fd.fan) {
            LPResult hi = lp_solve(t, Sense::Max, slice);
            LPResult lo = lp_solve(t, Sense::Min, slice);
            if (!hi.optimal() || !lo.optimal()) return false;
            Rational at_point = dot(t, fd.point);
            if (*hi.optimum != at_point || *lo.optimum != at_point) return false;
        }
    }
    // (3) dropping any one half-space opens the wedge past the facet plane
    for (std::size_t drop = 0; drop < planes.size(); ++drop) {
        HPolytope wedge(d);
        for (std::size_t j = 0; j < planes.size(); ++j)
            if (j != drop) wedge.add(planes[j]);
        LPResult r = lp_solve(fd.normal, Sense::Max, wedge);
        if (r.status == LPStatus::Unbounded) continue;
        if (!r.optimal() || *r.optimum <= 1) return false;
    }
    return true;
}

}  // namespace

MinkowskiTight gen_minkowski_tight(const PolytopeNorm& norm) {
    const int d = norm.dim();
    if (d < 2) throw std::invalid_argument("gen_minkowski_tight: needs dimension >= 2");
    auto facets = facet_data(norm);
    const int kd = static_cast<int>(facets.size()) * d;

    Rational theta(1, 2);
    for (int attempt = 0; attempt < 40; ++attempt, theta /= 2) {
        Family family(d);
        bool facet_ok = true;
        for (std::size_t f = 0; f < facets.size() && facet_ok; ++f) {
            const FacetData& fd = facets[f];
            std::vector<HalfSpace> planes;
            for (int j = 0; j < d; ++j) {
                RatVec n = add(fd.normal, scale(theta, fd.fan[static_cast<std::size_t>(j)]));
                planes.emplace_back(n, dot(n, fd.point));
            }
            if (!facet_halfspaces_ok(fd, planes, facets, d)) {
                facet_ok = false;
                break;
            }
            for (int j = 0; j < d; ++j) {
                HPolytope h(d);
                h.add(planes[static_cast<std::size_t>(j)]);
                family.add("f" + std::to_string(f) + "h" + std::to_string(j), ConvexBody(std::move(h)));
            }
        }
        if (!facet_ok) continue;

        MinkowskiTightReport report;
        report.theta = theta;

        std::vector<int> all(static_cast<std::size_t>(kd));
        for (int i = 0; i < kd; ++i) all[static_cast<std::size_t>(i)] = i;
        WidthCertificate full = rho_diameter(d, family.gather(all), norm);
        if (!full.ok() || full.value > 2) continue;
        report.full_diameter = full.value;

        bool subsets_ok = true;
        bool have_min = false;
        for (int out = 0; out < kd && subsets_ok; ++out) {
            std::vector<int> subset;
            for (int i = 0; i < kd; ++i)
                if (i != out) subset.push_back(i);
            WidthCertificate w = rho_diameter(d, family.gather(subset), norm);
            ++report.subsets_checked;
            if (w.status == ExtentStatus::Unbounded) {
                ++report.unbounded_subsets;
                continue;
            }
            if (!w.ok() || w.value <= 2) {
                subsets_ok = false;
                break;
            }
            if (!have_min || w.value < report.min_subset_diameter) {
                report.min_subset_diameter = w.value;
                have_min = true;
            }
        }
        if (!subsets_ok) continue;

        report.ok = true;
        return {std::move(family), std::move(report)};
    }
    throw std::runtime_error("gen_minkowski_tight: verification failed for every tilt");
}

// ---------------------------------------------------------------------------
// Discrete tightness
// ---------------------------------------------------------------------------

DiscreteTight gen_discrete_tight(int d) {
    if (d < 1) throw std::invalid_argument("gen_discrete_tight: dimension must be positive");
    // R: one coordinate in {0,3}, the rest in {1,2}; Q = {1,2}^d.
    std::vector<IntVec> r_points, q_points;
    const long total = 1;
    IntVec cur(static_cast<std::size_t>(d), Integer(0));
    (void)total;
    std::vector<long> stack(static_cast<std::size_t>(d), 0);
    // enumerate {0,1,2,3}^d and classify
    for (;;) {
        int extreme = 0;
        for (int i = 0; i < d; ++i) {
            const Integer& x = cur[static_cast<std::size_t>(i)];
            if (x == 0 || x == 3) ++extreme;
        }
        if (extreme == 0) q_points.push_back(cur);
        if (extreme == 1) r_points.push_back(cur);
        int c = d - 1;
        while (c >= 0) {
            if (cur[static_cast<std::size_t>(c)] < 3) {
                ++cur[static_cast<std::size_t>(c)];
                break;
            }
            cur[static_cast<std::size_t>(c)] = 0;
            --c;
        }
        if (c < 0) break;
    }

    Family family(d);
    for (std::size_t omit = 0; omit < r_points.size(); ++omit) {
        std::vector<RatVec> pts;
        for (const auto& q : q_points) pts.push_back(to_rational(q));
        for (std::size_t j = 0; j < r_points.size(); ++j)
            if (j != omit) pts.push_back(to_rational(r_points[j]));
        std::string id = "omit";
        for (const auto& x : r_points[omit]) id += "_" + x.get_str();
        family.add(id, ConvexBody(VBody(d, std::move(pts))));
    }

    DiscreteTightReport report;
    const int n = static_cast<int>(family.size());
    FractionalReport check = check_helly(family, n - 1, PredKColinear{3});
    report.subsets_checked = check.evaluated;
    report.leave_one_out_all_have_three_colinear = check.alpha == 1 && check.errors == 0;
    report.full_has_three_colinear = check.conclusion.value_or(true);
    report.full_lattice_points = integer_points(d, family.bodies);
    std::vector<IntVec> expected = q_points;
    std::sort(expected.begin(), expected.end());
    auto got = report.full_lattice_points;
    std::sort(got.begin(), got.end());
    report.ok = report.leave_one_out_all_have_three_colinear &&
                !report.full_has_three_colinear && got == expected;
    if (!report.ok) throw std::runtime_error("gen_discrete_tight: verification failed");
    return {std::move(family), std::move(report)};
}

// ---------------------------------------------------------------------------
// Non-polytope demonstration (Euclidean disk, d = 2)
// ---------------------------------------------------------------------------

namespace {

// Diameter of the intersection of unit-disk tangent half-planes at the
// given angles; +inf when unbounded. Plain floating point: this only
// steers the search for s_n, never the emitted family.
double tangent_tuple_diameter(const std::vector<double>& angles) {
    const std::size_t n = angles.size();
    std::vector<std::array<double, 2>> normals(n);
    for (std::size_t i = 0; i < n; ++i) normals[i] = {std::cos(angles[i]), std::sin(angles[i])};
    // Unbounded iff all normals fit in an open half-plane.
    std::vector<double> sorted(angles);
    for (auto& a : sorted) a = std::fmod(std::fmod(a, 2 * M_PI) + 2 * M_PI, 2 * M_PI);
    std::sort(sorted.begin(), sorted.end());
    double max_gap = sorted.front() + 2 * M_PI - sorted.back();
    for (std::size_t i = 1; i < n; ++i) max_gap = std::max(max_gap, sorted[i] - sorted[i - 1]);
    if (max_gap >= M_PI - 1e-12) return std::numeric_limits<double>::infinity();

    std::vector<std::array<double, 2>> verts;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double det = normals[i][0] * normals[j][1] - normals[i][1] * normals[j][0];
            if (std::fabs(det) < 1e-12) continue;
            double x = (normals[j][1] - normals[i][1]) / det;
            double y = (normals[i][0] - normals[j][0]) / det;
            bool feasible = true;
            for (std::size_t t = 0; t < n && feasible; ++t)
                feasible = normals[t][0] * x + normals[t][1] * y <= 1 + 1e-9;
            if (feasible) verts.push_back({x, y});
        }
    }
    if (verts.size() < 2) return std::numeric_limits<double>::infinity();
    double best = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            best = std::max(best, std::hypot(verts[i][0] - verts[j][0], verts[i][1] - verts[j][1]));
    return best;
}

double estimate_s_n(int n, std::uint64_t seed) {
    std::vector<double> angles(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) angles[static_cast<std::size_t>(i)] = 2 * M_PI * i / n;
    double best = tangent_tuple_diameter(angles);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-1.0, 1.0);
    auto current = angles;
    for (double step = 0.5; step > 1e-7; step *= 0.5) {
        bool improved = true;
        while (improved) {
            improved = false;
            for (int i = 0; i < n; ++i) {
                for (double delta : {step, -step}) {
                    auto trial = current;
                    trial[static_cast<std::size_t>(i)] += delta;
                    double val = tangent_tuple_diameter(trial);
                    if (val < best) {
                        best = val;
                        current = trial;
                        improved = true;
                    }
                }
            }
        }
        // a few random restarts per scale guard against poor local minima
        for (int r = 0; r < 8; ++r) {
            auto trial = angles;
            for (auto& a : trial) a += step * jitter(rng);
            double val = tangent_tuple_diameter(trial);
            if (val < best) {
                best = val;
                current = trial;
            }
        }
    }
    return best;
}

// Exactly-unit rational direction near the given angle, via a rational
// point on the circle.
RatVec rational_unit_direction(double angle) {
    double a = std::remainder(angle, 2 * M_PI);
    bool flip = false;
    if (a > M_PI / 2 || a < -M_PI / 2) {
        a = std::remainder(a - M_PI, 2 * M_PI);
        flip = true;
    }
    const long den = 1 << 12;
    long t_num = std::lround(std::tan(a / 2) * den);
    Rational t = rat(t_num, den);
    Rational one(1);
    Rational denom = one + t * t;
    RatVec u{(one - t * t) / denom, 2 * t / denom};
    if (flip) u = negate(u);
    return u;
}

}  // namespace

NonpolytopeDemo gen_nonpolytope_demo(int n, int m_gon, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen_nonpolytope_demo: n must be at least 2");
    if (m_gon < 3 * n) throw std::invalid_argument("gen_nonpolytope_demo: m_gon must be at least 3n");

    double s_est = estimate_s_n(n, seed);
    if (!(s_est > 2.0))
        throw std::runtime_error("gen_nonpolytope_demo: search failed to certify s_n > 2");

    NonpolytopeDemoReport report;
    report.s_n_estimate = s_est;
    report.epsilon = (s_est - 2.0) / 3.0;

    // Shrink the divisor a little at a time until the exact verification
    // passes; the estimate may sit above the true minimum. Tuples that are
    // always unbounded (n = 2) leave the divisor free, any value past the
    // polygon diameter works.
    std::vector<double> margins{0.98, 0.95, 0.9, 0.85};
    if (!std::isfinite(s_est)) {
        s_est = 3.0;
        margins = {1.0, 4.0 / 3.0};
    }
    for (double margin : margins) {
        Rational sigma = parse_rational(std::to_string(std::floor(s_est * margin * 1000.0) / 1000.0));
        if (sigma <= 2) break;
        Family family(2);
        for (int i = 0; i < m_gon; ++i) {
            RatVec u = rational_unit_direction(2 * M_PI * i / m_gon);
            HPolytope h(2);
            h.add(u, 1 / sigma);
            family.add("tangent" + std::to_string(i), ConvexBody(std::move(h)));
        }

        report.scale = sigma;
        report.subsets_checked = 0;
        report.unbounded_subsets = 0;
        bool ok = true;
        bool have_min = false;
        std::vector<int> comb(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) comb[static_cast<std::size_t>(i)] = i;
        for (;;) {
            L2Diameter l2 = l2_diameter_exact(2, family.gather(comb));
            ++report.subsets_checked;
            if (l2.status == ExtentStatus::Unbounded) {
                ++report.unbounded_subsets;
            } else if (l2.ok() && l2.squared >= 1) {
                if (!have_min || l2.squared < report.min_subset_sq) {
                    report.min_subset_sq = l2.squared;
                    have_min = true;
                }
            } else {
                ok = false;
                break;
            }
            int i = n - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == m_gon - n + i) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < n; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
        if (!ok) continue;

        std::vector<int> all(static_cast<std::size_t>(m_gon));
        for (int i = 0; i < m_gon; ++i) all[static_cast<std::size_t>(i)] = i;
        L2Diameter full = l2_diameter_exact(2, family.gather(all));
        if (!full.ok() || full.squared >= 1) continue;
        report.full_sq = full.squared;
        report.ok = true;
        return {std::move(family), std::move(report)};
    }
    throw std::runtime_error("gen_nonpolytope_demo: exact verification failed at every margin");
}

}  // namespace qhelly
