// Command-line driver: family files in, JSON (or table) reports out.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "qhelly/io.hpp"
#include "qhelly/lp.hpp"

namespace {

using namespace qhelly;

int env_jobs() {
    const char* v = std::getenv("HELLY_JOBS");
    if (!v) return 1;
    int j = std::atoi(v);
    return j > 0 ? j : 1;
}

RatVec parse_vector(const std::string& text, int dim) {
    RatVec out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(parse_rational(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(parse_rational(cur));
    if (static_cast<int>(out.size()) != dim)
        throw std::invalid_argument("expected a vector with " + std::to_string(dim) + " entries");
    return out;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(out_path, j);
}

void print_fractional_table(const FractionalReport& r) {
    std::cout << "subset size      " << r.subset_size << "\n"
              << "subsets total    " << r.total.get_str() << (r.sampled ? " (sampled)" : "") << "\n"
              << "evaluated        " << r.evaluated << "\n"
              << "satisfying       " << r.satisfying << "\n"
              << "errors           " << r.errors << "\n"
              << "alpha            " << to_string(r.alpha) << "\n";
    if (r.conclusion) std::cout << "conclusion       " << (*r.conclusion ? "true" : "false") << "\n";
    if (r.conclusion_value)
        std::cout << "conclusion value " << to_string(*r.conclusion_value) << "\n";
    if (r.best_subfamily)
        std::cout << "best subfamily   " << r.best_subfamily->first.size() << " members"
                  << (r.best_subfamily_heuristic ? " (greedy)" : "") << "\n";
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& params) {
    std::map<std::string, std::string> out;
    for (const auto& p : params) {
        auto eq = p.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("param '" + p + "' is not key=value");
        out[p.substr(0, eq)] = p.substr(eq + 1);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for Helly-type diameter and lattice checks on convex families"};
    app.require_subcommand(1);

    EngineOptions opts;
    opts.jobs = env_jobs();
    app.add_option("--seed", opts.seed, "seed for sampled enumeration")->capture_default_str();
    app.add_option("--jobs", opts.jobs, "worker threads for subset evaluation");
    std::uint64_t cap = opts.subset_cap;
    app.add_option("--cap", cap, "exhaustive enumeration cap before sampling");
    std::string format = "json";
    app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
    std::string out_path;
    app.add_option("--out", out_path, "write the report to this file instead of stdout");

    // check ------------------------------------------------------------
    auto* check = app.add_subcommand("check", "evaluate a predicate over subset intersections");
    std::string family_path, predicate, v_text, norm_spec = "linf", threshold_text = "1";
    int subset_size = -1, k_param = 3;
    std::vector<std::string> colorful_paths;
    check->add_option("--family", family_path, "family file");
    check->add_option("--subset-size", subset_size, "m: subfamily size");
    check->add_option("--predicate", predicate,
                      "nonempty | vwidth | vwidth-cap | diameter | integer-point | colinear")
        ->required();
    check->add_option("--v", v_text, "direction for vwidth predicates, e.g. \"1,0\"");
    check->add_option("--norm", norm_spec, "linf | l1 | l2 | norm file (diameter predicate)");
    check->add_option("--threshold", threshold_text, "rational threshold");
    check->add_option("--k", k_param, "progression length for colinear");
    check->add_option("--colorful", colorful_paths, "one family file per color")->expected(-1);

    // diameter ----------------------------------------------------------
    auto* diameter = app.add_subcommand("diameter", "exact diameter certificate of the intersection");
    std::string d_family, d_norm = "linf";
    diameter->add_option("--family", d_family, "family file")->required();
    diameter->add_option("--norm", d_norm, "linf | l1 | l2 | norm file");

    // lattice -----------------------------------------------------------
    auto* lattice = app.add_subcommand("lattice", "k colinear integer points in the intersection");
    std::string l_family;
    int l_k = 3;
    lattice->add_option("--family", l_family, "family file")->required();
    lattice->add_option("--k", l_k, "progression length");

    // lift ----------------------------------------------------------------
    auto* lift = app.add_subcommand("lift", "write the lifted family file");
    std::string lift_family, lift_kind, lift_v, lift_norm = "linf", lift_out;
    int lift_k = 3, lift_facet = 1;
    lift->add_option("--family", lift_family, "family file")->required();
    lift->add_option("--kind", lift_kind, "width | discrete | boundary | product")->required();
    lift->add_option("--v", lift_v, "direction for width/discrete");
    lift->add_option("--norm", lift_norm, "norm for boundary/product");
    lift->add_option("--k", lift_k, "progression length for discrete");
    lift->add_option("--facet", lift_facet, "facet index for boundary (1-based, negative = opposing)");

    // generate ------------------------------------------------------------
    auto* generate = app.add_subcommand("generate", "emit a verified construction");
    std::string construction;
    std::vector<std::string> params;
    std::string verify_out;
    generate->add_option("--construction", construction,
                         "minkowski-tight | discrete-tight | nonpolytope-demo")
        ->required();
    generate->add_option("--params", params, "key=value pairs, e.g. d=2 norm=linf")->expected(-1);
    generate->add_option("--verify-out", verify_out, "write the verification report here");

    // gamma / beta ----------------------------------------------------------
    auto* gamma_cmd = app.add_subcommand("gamma", "two-cap volume fraction, truncated infimum");
    double g_c = 0.1;
    int g_dmax = 200, g_grid = 0;
    double g_cmin = 0.05, g_cmax = 1.3;
    gamma_cmd->add_option("--c", g_c, "cap parameter in (0, sqrt 2)");
    gamma_cmd->add_option("--dmax", g_dmax, "truncation dimension");
    gamma_cmd->add_option("--grid", g_grid, "emit a CSV c-grid of this many points instead");
    gamma_cmd->add_option("--cmin", g_cmin, "grid start");
    gamma_cmd->add_option("--cmax", g_cmax, "grid end");

    auto* beta_cmd = app.add_subcommand("beta", "guaranteed subfamily fraction");
    double b_alpha = 1.0, b_c = 0.1;
    int b_d = 2;
    bool b_colorful = false;
    beta_cmd->add_option("--alpha", b_alpha, "hypothesis fraction in (0,1]")->required();
    beta_cmd->add_option("--c", b_c, "cap parameter")->required();
    beta_cmd->add_option("--d", b_d, "dimension")->required();
    beta_cmd->add_flag("--colorful", b_colorful, "colorful variant");

    // certify -----------------------------------------------------------------
    auto* certify = app.add_subcommand("certify", "iterative lower-bound sequence for the diameter");
    std::string c_family, c_norm = "linf";
    int c_steps = 20;
    certify->add_option("--family", c_family, "family file")->required();
    certify->add_option("--norm", c_norm, "linf | l1 | norm file");
    certify->add_option("--steps", c_steps, "sequence length");

    // global options (--out, --seed, ...) may appear after the subcommand
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    opts.subset_cap = cap;

    try {
        if (check->parsed()) {
            if (!colorful_paths.empty()) {
                std::vector<Family> families;
                for (const auto& p : colorful_paths) families.push_back(read_family_file(p));
                ColorfulFamilies colors(std::move(families));
                int dim = colors.dim();
                Predicate pred = PredNonempty{};
                if (predicate == "vwidth")
                    pred = PredVWidthAtLeast{parse_vector(v_text, dim), parse_rational(threshold_text)};
                else if (predicate == "vwidth-cap")
                    pred = PredVWidthCap{parse_vector(v_text, dim), parse_rational(threshold_text)};
                else if (predicate == "diameter")
                    pred = PredDiameterAtLeast{norm_spec == "l2"
                                                   ? std::optional<PolytopeNorm>{}
                                                   : std::optional<PolytopeNorm>(resolve_norm(norm_spec, dim)),
                                               parse_rational(threshold_text)};
                else if (predicate == "integer-point")
                    pred = PredContainsIntegerPoint{};
                else if (predicate == "colinear")
                    pred = PredKColinear{k_param};
                else if (predicate != "nonempty")
                    throw std::invalid_argument("unknown predicate '" + predicate + "'");
                ColorfulReport rep = check_colorful(colors, pred, opts);
                emit(colorful_report_to_json(rep), out_path);
                return 0;
            }
            if (family_path.empty()) throw std::invalid_argument("check needs --family");
            Family family = read_family_file(family_path);
            if (subset_size < 0) throw std::invalid_argument("check needs --subset-size");
            Predicate pred = PredNonempty{};
            if (predicate == "vwidth")
                pred = PredVWidthAtLeast{parse_vector(v_text, family.dim), parse_rational(threshold_text)};
            else if (predicate == "vwidth-cap")
                pred = PredVWidthCap{parse_vector(v_text, family.dim), parse_rational(threshold_text)};
            else if (predicate == "diameter")
                pred = PredDiameterAtLeast{norm_spec == "l2"
                                               ? std::optional<PolytopeNorm>{}
                                               : std::optional<PolytopeNorm>(resolve_norm(norm_spec, family.dim)),
                                           parse_rational(threshold_text)};
            else if (predicate == "integer-point")
                pred = PredContainsIntegerPoint{};
            else if (predicate == "colinear")
                pred = PredKColinear{k_param};
            else if (predicate != "nonempty")
                throw std::invalid_argument("unknown predicate '" + predicate + "'");
            FractionalReport rep = check_helly(family, subset_size, pred, opts);
            if (format == "table")
                print_fractional_table(rep);
            else
                emit(fractional_report_to_json(rep), out_path);
            return 0;
        }

        if (diameter->parsed()) {
            Family family = read_family_file(d_family);
            if (d_norm == "l2") {
                L2Diameter d2 = l2_diameter_exact(family.dim, family.bodies);
                emit(l2_diameter_to_json(d2), out_path);
            } else {
                PolytopeNorm norm = resolve_norm(d_norm, family.dim);
                WidthCertificate w = rho_diameter(family.dim, family.bodies, norm);
                emit(width_certificate_to_json(w), out_path);
            }
            return 0;
        }

        if (lattice->parsed()) {
            Family family = read_family_file(l_family);
            auto witness = contains_k_colinear(family.dim, family.bodies, l_k);
            json j;
            j["found"] = witness.has_value();
            if (witness)
                j["witness"] = witness_to_json(*witness);
            else
                j["witness"] = nullptr;
            if (format == "table")
                std::cout << (witness ? witness_to_json(*witness).dump() : std::string("none")) << "\n";
            else
                emit(j, out_path);
            return 0;
        }

        if (lift->parsed()) {
            Family family = read_family_file(lift_family);
            const int dim = family.dim;
            if (lift_kind == "product") {
                PolytopeNorm norm = resolve_norm(lift_norm, dim);
                json members = json::array();
                json out;
                for (std::size_t i = 0; i < family.size(); ++i) {
                    if (!family.bodies[i].is_h())
                        throw std::invalid_argument("product lift needs half-space members");
                    ProductLift pl = lift_product(family.bodies[i].h(), norm);
                    json m;
                    m["id"] = family.ids[i];
                    m["type"] = "H";
                    json hs = json::array();
                    for (const auto& c : pl.poly.constraints) {
                        json one;
                        one["a"] = rational_vec_to_json(c.normal);
                        one["b"] = to_string(c.offset);
                        hs.push_back(std::move(one));
                    }
                    m["halfspaces"] = std::move(hs);
                    members.push_back(std::move(m));
                    if (i == 0) {
                        out["dim"] = pl.poly.dim;
                        out["lift"] = {{"kind", "product"},
                                       {"base_dim", dim},
                                       {"f", rational_vec_to_json(pl.f_coeffs)}};
                    }
                }
                out["members"] = std::move(members);
                emit(out, out_path);
                return 0;
            }
            std::vector<LiftedBody> lifts;
            for (std::size_t i = 0; i < family.size(); ++i) {
                if (lift_kind == "width") {
                    if (!family.bodies[i].is_h())
                        throw std::invalid_argument("width lift needs half-space members");
                    lifts.push_back(lift_width(family.bodies[i].h(), parse_vector(lift_v, dim)));
                } else if (lift_kind == "discrete") {
                    RatVec v = lift_v.empty() ? default_discrete_direction(dim)
                                              : parse_vector(lift_v, dim);
                    lifts.push_back(lift_discrete(family.bodies[i], lift_k, v));
                } else if (lift_kind == "boundary") {
                    if (!family.bodies[i].is_h())
                        throw std::invalid_argument("boundary lift needs half-space members");
                    lifts.push_back(lift_boundary(family.bodies[i].h(),
                                                  resolve_norm(lift_norm, dim), lift_facet));
                } else {
                    throw std::invalid_argument("unknown lift kind '" + lift_kind + "'");
                }
            }
            emit(lifted_family_to_json(lifts, family.ids), out_path);
            return 0;
        }

        if (generate->parsed()) {
            auto kv = parse_params(params);
            json verification;
            json family_json;
            bool ok = false;
            if (construction == "discrete-tight") {
                int d = kv.count("d") ? std::stoi(kv["d"]) : 2;
                DiscreteTight gen = gen_discrete_tight(d);
                family_json = family_to_json(gen.family);
                verification = discrete_report_to_json(gen.report);
                ok = gen.report.ok;
            } else if (construction == "minkowski-tight") {
                int d = kv.count("d") ? std::stoi(kv["d"]) : 2;
                std::string nm = kv.count("norm") ? kv["norm"] : "linf";
                MinkowskiTight gen = gen_minkowski_tight(resolve_norm(nm, d));
                family_json = family_to_json(gen.family);
                verification = minkowski_report_to_json(gen.report);
                ok = gen.report.ok;
            } else if (construction == "nonpolytope-demo") {
                int n = kv.count("n") ? std::stoi(kv["n"]) : 3;
                int m = kv.count("m") ? std::stoi(kv["m"]) : 3 * n + 3;
                NonpolytopeDemo gen = gen_nonpolytope_demo(n, m, opts.seed);
                family_json = family_to_json(gen.family);
                verification = nonpolytope_report_to_json(gen.report);
                ok = gen.report.ok;
            } else {
                throw std::invalid_argument("unknown construction '" + construction + "'");
            }
            emit(family_json, out_path);
            if (!verify_out.empty())
                write_json_file(verify_out, verification);
            else
                std::cerr << verification.dump(2) << "\n";
            return ok ? 0 : 1;
        }

        if (gamma_cmd->parsed()) {
            if (g_grid > 0) {
                std::cout << "c,gamma\n";
                for (int i = 0; i < g_grid; ++i) {
                    double c = g_cmin + (g_cmax - g_cmin) * i / (g_grid - 1);
                    std::cout << c << "," << eval_gamma(c, g_dmax).value << "\n";
                }
                return 0;
            }
            emit(gamma_to_json(eval_gamma(g_c, g_dmax)), out_path);
            return 0;
        }

        if (beta_cmd->parsed()) {
            BetaEval b = beta_fractional(b_alpha, b_c, b_d, b_colorful);
            json j;
            j["alpha"] = b_alpha;
            j["c"] = b_c;
            j["d"] = b_d;
            j["colorful"] = b_colorful;
            j["gamma"] = b.gamma;
            j["beta"] = b.value;
            j["vacuous"] = b.vacuous;
            emit(j, out_path);
            return 0;
        }

        if (certify->parsed()) {
            Family family = read_family_file(c_family);
            PolytopeNorm norm = resolve_norm(c_norm, family.dim);
            DiameterCertificate cert = certify_diameter(family, norm, c_steps, opts);
            emit(certificate_to_json(cert), out_path);
            return cert.refused ? 1 : 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
