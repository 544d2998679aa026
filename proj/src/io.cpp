#include "qhelly/io.hpp"

#include <cmath>
#include <fstream>

namespace qhelly {

namespace {

json rational_to_json(const Rational& q) {
    return to_string(q);
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return parse_rational(j.get<std::string>());
}

json int_vec_to_json(const IntVec& v) {
    json out = json::array();
    for (const auto& x : v) {
        if (x.fits_slong_p())
            out.push_back(x.get_si());
        else
            out.push_back(x.get_str());
    }
    return out;
}

}  // namespace

json rational_vec_to_json(const RatVec& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(rational_to_json(q));
    return out;
}

RatVec rational_vec_from_json(const json& j) {
    RatVec out;
    for (const auto& e : j) out.push_back(rational_from_json(e));
    return out;
}

namespace {

json body_to_json(const std::string& id, const ConvexBody& body) {
    json m;
    m["id"] = id;
    if (body.is_h()) {
        m["type"] = "H";
        json hs = json::array();
        for (const auto& c : body.h().constraints) {
            json one;
            one["a"] = rational_vec_to_json(c.normal);
            one["b"] = rational_to_json(c.offset);
            hs.push_back(std::move(one));
        }
        m["halfspaces"] = std::move(hs);
    } else {
        m["type"] = "V";
        json pts = json::array();
        for (const auto& p : body.v().points) pts.push_back(rational_vec_to_json(p));
        m["points"] = std::move(pts);
    }
    return m;
}

ConvexBody body_from_json(const json& m, int dim) {
    const std::string type = m.at("type").get<std::string>();
    if (type == "H") {
        HPolytope h(dim);
        for (const auto& c : m.at("halfspaces"))
            h.add(rational_vec_from_json(c.at("a")), rational_from_json(c.at("b")));
        return ConvexBody(std::move(h));
    }
    if (type == "V") {
        std::vector<RatVec> pts;
        for (const auto& p : m.at("points")) pts.push_back(rational_vec_from_json(p));
        return ConvexBody(VBody(dim, std::move(pts)));
    }
    throw std::invalid_argument("family member type must be \"H\" or \"V\"");
}

}  // namespace

json family_to_json(const Family& family) {
    json out;
    out["dim"] = family.dim;
    json members = json::array();
    for (std::size_t i = 0; i < family.size(); ++i)
        members.push_back(body_to_json(family.ids[i], family.bodies[i]));
    out["members"] = std::move(members);
    return out;
}

Family family_from_json(const json& j) {
    Family family(j.at("dim").get<int>());
    for (const auto& m : j.at("members"))
        family.add(m.at("id").get<std::string>(), body_from_json(m, family.dim));
    return family;
}

json norm_to_json(const PolytopeNorm& norm) {
    json out;
    out["name"] = norm.name();
    out["dim"] = norm.dim();
    json fs = json::array();
    for (const auto& f : norm.functionals()) fs.push_back(rational_vec_to_json(f));
    out["functionals"] = std::move(fs);
    return out;
}

PolytopeNorm norm_from_json(const json& j) {
    std::vector<RatVec> fs;
    for (const auto& f : j.at("functionals")) fs.push_back(rational_vec_from_json(f));
    return PolytopeNorm(j.at("dim").get<int>(), std::move(fs),
                        j.value("name", std::string("custom")));
}

PolytopeNorm resolve_norm(const std::string& spec, int dim) {
    if (spec == "linf") return PolytopeNorm::linf(dim);
    if (spec == "l1") return PolytopeNorm::l1(dim);
    return norm_from_json(read_json_file(spec));
}

json witness_to_json(const LatticeWitness& w) {
    json out;
    out["base"] = int_vec_to_json(w.base);
    out["step"] = int_vec_to_json(w.step);
    out["k"] = w.count;
    return out;
}

json width_certificate_to_json(const WidthCertificate& w) {
    json out;
    switch (w.status) {
        case ExtentStatus::Empty: out["status"] = "empty"; break;
        case ExtentStatus::Unbounded: out["status"] = "unbounded"; break;
        case ExtentStatus::Ok: out["status"] = "ok"; break;
    }
    if (w.ok()) {
        out["value"] = rational_to_json(w.value);
        out["max_point"] = rational_vec_to_json(w.max_point);
        out["min_point"] = rational_vec_to_json(w.min_point);
        out["direction"] = rational_vec_to_json(w.direction);
        if (w.functional_index >= 0) out["functional_index"] = w.functional_index;
    }
    return out;
}

json l2_diameter_to_json(const L2Diameter& d) {
    json out;
    switch (d.status) {
        case ExtentStatus::Empty: out["status"] = "empty"; break;
        case ExtentStatus::Unbounded: out["status"] = "unbounded"; break;
        case ExtentStatus::Ok: out["status"] = "ok"; break;
    }
    if (d.ok()) {
        out["squared"] = rational_to_json(d.squared);
        out["squared_approx"] = to_double(d.squared);
        out["p"] = rational_vec_to_json(d.p);
        out["q"] = rational_vec_to_json(d.q);
    }
    return out;
}

json fractional_report_to_json(const FractionalReport& r) {
    json out;
    out["subset_size"] = r.subset_size;
    out["total"] = r.total.get_str();
    out["evaluated"] = r.evaluated;
    out["satisfying"] = r.satisfying;
    out["errors"] = r.errors;
    out["sampled"] = r.sampled;
    out["alpha"] = to_string(r.alpha);
    if (r.conclusion) out["conclusion"] = *r.conclusion;
    if (r.conclusion_value) out["conclusion_value"] = to_string(*r.conclusion_value);
    if (r.conclusion_unbounded) out["conclusion_unbounded"] = true;
    if (!r.first_violation.empty()) out["first_violation"] = r.first_violation;
    if (r.best_subfamily) {
        out["best_subfamily"] = r.best_subfamily->first;
        out["best_subfamily_value"] = to_string(r.best_subfamily->second);
        out["best_subfamily_heuristic"] = r.best_subfamily_heuristic;
    }
    if (r.meets_fractional_bound) out["meets_fractional_bound"] = *r.meets_fractional_bound;
    return out;
}

json colorful_report_to_json(const ColorfulReport& r) {
    json out;
    out["total"] = r.total.get_str();
    out["evaluated"] = r.evaluated;
    out["satisfying"] = r.satisfying;
    out["errors"] = r.errors;
    out["sampled"] = r.sampled;
    out["alpha"] = to_string(r.alpha);
    out["hypothesis_all"] = r.hypothesis_all;
    out["concluding_colors"] = r.concluding_colors;
    if (!r.first_violation.empty()) out["first_violation"] = r.first_violation;
    return out;
}

json certificate_to_json(const DiameterCertificate& c) {
    json out;
    out["refused"] = c.refused;
    if (c.refused) {
        out["violating_subset"] = c.violating_subset;
        return out;
    }
    json steps = json::array();
    for (const auto& s : c.steps) {
        json one;
        one["n"] = s.n;
        one["f_target"] = to_string(s.f_target);
        one["g"] = to_string(s.g_value);
        one["beta"] = to_string(s.beta);
        one["solved"] = s.solved;
        steps.push_back(std::move(one));
    }
    out["steps"] = std::move(steps);
    out["final_beta"] = to_string(c.final_beta);
    out["reached_target"] = c.reached_target;
    return out;
}

json gamma_to_json(const GammaEval& g) {
    json out;
    out["c"] = g.c;
    out["d_max"] = g.d_max;
    out["value"] = g.value;
    out["gaussian_limit"] = g.gaussian_limit;
    out["truncated_inf"] = g.truncated;
    json per_d = json::array();
    for (std::size_t i = 0; i < g.per_d.size(); ++i) {
        json one;
        one["d"] = static_cast<int>(i) + 2;
        one["two_cap_fraction"] = g.per_d[i];
        per_d.push_back(std::move(one));
    }
    out["per_d"] = std::move(per_d);
    return out;
}

json cap_cover_to_json(const CapCoverReport& r) {
    json out;
    out["empty"] = r.empty;
    out["directions_recorded"] = r.directions_recorded;
    if (!r.empty) {
        out["axis"] = rational_vec_to_json(r.axis);
        out["axis_score"] = r.axis_score;
        out["gamma"] = r.gamma_used;
        out["beta_bound"] = r.beta_bound;
        out["meets_beta"] = r.meets_beta;
        out["vwidth"] = fractional_report_to_json(r.vwidth);
    }
    return out;
}

json minkowski_report_to_json(const MinkowskiTightReport& r) {
    json out;
    out["ok"] = r.ok;
    out["theta"] = to_string(r.theta);
    out["full_diameter"] = to_string(r.full_diameter);
    out["subsets_checked"] = r.subsets_checked;
    out["unbounded_subsets"] = r.unbounded_subsets;
    out["min_subset_diameter"] = to_string(r.min_subset_diameter);
    return out;
}

json discrete_report_to_json(const DiscreteTightReport& r) {
    json out;
    out["ok"] = r.ok;
    out["subsets_checked"] = r.subsets_checked;
    out["leave_one_out_all_have_three_colinear"] = r.leave_one_out_all_have_three_colinear;
    out["full_has_three_colinear"] = r.full_has_three_colinear;
    json pts = json::array();
    for (const auto& p : r.full_lattice_points) pts.push_back(int_vec_to_json(p));
    out["full_lattice_points"] = std::move(pts);
    return out;
}

json nonpolytope_report_to_json(const NonpolytopeDemoReport& r) {
    json out;
    out["ok"] = r.ok;
    if (std::isfinite(r.s_n_estimate)) {
        out["s_n_estimate"] = r.s_n_estimate;
        out["epsilon"] = r.epsilon;
    } else {
        out["s_n_estimate"] = "unbounded";
        out["epsilon"] = "unbounded";
    }
    out["scale"] = to_string(r.scale);
    out["subsets_checked"] = r.subsets_checked;
    out["unbounded_subsets"] = r.unbounded_subsets;
    out["min_subset_squared"] = to_string(r.min_subset_sq);
    out["full_squared"] = to_string(r.full_sq);
    return out;
}

json lifted_family_to_json(const std::vector<LiftedBody>& lifts,
                           const std::vector<std::string>& ids) {
    if (lifts.empty()) throw std::invalid_argument("lifted_family_to_json: no lifts");
    json out;
    out["dim"] = lifts.front().lifted_dim();
    json members = json::array();
    for (std::size_t i = 0; i < lifts.size(); ++i)
        members.push_back(body_to_json(ids[i], lifts[i].lifted));
    out["members"] = std::move(members);
    json lift;
    const LiftedBody& l = lifts.front();
    switch (l.kind) {
        case LiftKind::Width: lift["kind"] = "width"; break;
        case LiftKind::Discrete: lift["kind"] = "discrete"; break;
        case LiftKind::Boundary: lift["kind"] = "boundary"; break;
    }
    lift["base_dim"] = l.base_dim;
    if (!l.direction.empty()) lift["direction"] = rational_vec_to_json(l.direction);
    if (l.k > 0) lift["k"] = l.k;
    if (l.facet_index != -1) lift["facet_index"] = l.facet_index;
    out["lift"] = std::move(lift);
    return out;
}

Family read_family_file(const std::string& path) {
    return family_from_json(read_json_file(path));
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    json j;
    in >> j;
    return j;
}

}  // namespace qhelly
