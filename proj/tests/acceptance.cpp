// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line with its runtime. Random instances are seeded, so runs reproduce.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <random>

#include "qhelly/analytics.hpp"
#include "qhelly/constructions.hpp"
#include "qhelly/io.hpp"
#include "qhelly/lift.hpp"
#include "qhelly/lp.hpp"
#include "qhelly/radon.hpp"
#include "test_util.hpp"

using namespace qhelly;
using qtest::rand_point;
using qtest::rand_polytope;
using qtest::rand_polytope_containing;
using qtest::unit_axis;

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int idx, const std::string& name, bool ok, double secs) {
    std::cout << "[criterion " << idx << "] " << name << ": " << (ok ? "PASS" : "FAIL") << "  ("
              << secs << " s)" << std::endl;
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(QHELLY_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
}

Family scaled_tight_family(const MinkowskiTight& gen, const Rational& factor) {
    Family scaled(gen.family.dim);
    for (std::size_t i = 0; i < gen.family.size(); ++i) {
        HPolytope h = gen.family.bodies[i].h();
        for (auto& hs : h.constraints) hs.offset *= factor;
        scaled.add(gen.family.ids[i], ConvexBody(std::move(h)));
    }
    return scaled;
}

}  // namespace

TEST_CASE("criterion 1: discrete tightness construction") {
    Stopwatch watch;
    bool ok = true;

    // d = 2 through the command-line surface
    const std::string dir = "/tmp/qhelly_acceptance";
    std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
    const std::string fam = dir + "/d2.json";
    ok &= run_cli("generate --construction discrete-tight --params d=2 --out " + fam +
                  " --verify-out " + dir + "/d2_verify.json") == 0;
    ok &= run_cli("check --family " + fam + " --subset-size 7 --predicate colinear --k 3 --out " +
                  dir + "/d2_report.json") == 0;
    if (ok) {
        json rep = read_json_file(dir + "/d2_report.json");
        ok &= rep["alpha"] == "1";
        ok &= rep["conclusion"] == false;
        Family family = read_family_file(fam);
        auto pts = integer_points(2, family.bodies);
        ok &= pts.size() == 4;
        for (const auto& p : pts)
            for (const auto& c : p) ok &= (c == 1 || c == 2);
    }
    double d2_time = watch.seconds();
    ok &= d2_time < 10.0;

    // d = 1 and d = 3 through the library
    DiscreteTight d1 = gen_discrete_tight(1);
    ok &= d1.report.ok && d1.family.size() == 2;
    DiscreteTight d3 = gen_discrete_tight(3);
    ok &= d3.report.ok && d3.family.size() == 24 && d3.report.subsets_checked == 24;
    ok &= d3.report.full_lattice_points.size() == 8;

    double total = watch.seconds();
    ok &= total < 300.0;
    report(1, "discrete tightness (d=1,2,3)", ok, total);
    CHECK(ok);
}

TEST_CASE("criterion 2: lattice Helly property suite") {
    Stopwatch watch;
    bool ok = true;
    std::mt19937_64 rng(2024);
    int hypothesis_true_d1 = 0;

    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<int> nm(5, 7), shift(-4, 4);
        int n = nm(rng);
        Family family(1);
        bool planted = trial % 2 == 0;
        RatVec a{Rational(shift(rng))};
        std::vector<RatVec> pair{a, add(a, {Rational(1)})};
        for (int i = 0; i < n; ++i) {
            HPolytope body = planted ? rand_polytope_containing(rng, 1, pair)
                                     : rand_polytope(rng, 1, 1);
            family.add("m" + std::to_string(i), ConvexBody(std::move(body)));
        }
        FractionalReport rep = check_helly(family, 4, PredKColinear{2});
        if (rep.errors > 0) continue;
        if (rep.alpha == 1) {
            ++hypothesis_true_d1;
            if (!rep.conclusion.value_or(false)) ok = false;  // counterexample
        }
    }
    ok &= hypothesis_true_d1 >= 100;

    int hypothesis_true_d2 = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Family family(2);
        bool planted = trial % 2 == 0;
        std::uniform_int_distribution<int> shift(-3, 3);
        RatVec a{Rational(shift(rng)), Rational(shift(rng))};
        std::vector<RatVec> pair{a, add(a, {Rational(1), Rational(1)})};
        for (int i = 0; i < 17; ++i) {
            HPolytope body = planted ? rand_polytope_containing(rng, 2, pair)
                                     : rand_polytope(rng, 2, 1);
            family.add("m" + std::to_string(i), ConvexBody(std::move(body)));
        }
        FractionalReport rep = check_helly(family, 16, PredKColinear{2});
        if (rep.errors > 0) continue;
        if (rep.alpha == 1) {
            ++hypothesis_true_d2;
            if (!rep.conclusion.value_or(false)) ok = false;
        }
    }
    ok &= hypothesis_true_d2 >= 30;

    double total = watch.seconds();
    ok &= total < 600.0;
    report(2, "lattice progressions transfer to the full intersection", ok, total);
    CHECK(ok);
}

TEST_CASE("criterion 3: tight half-space families for polytope norms") {
    Stopwatch watch;
    bool ok = true;
    struct Case {
        PolytopeNorm norm;
        std::size_t members;
    };
    std::vector<Case> cases{{PolytopeNorm::linf(2), 8},
                            {PolytopeNorm::l1(2), 8},
                            {PolytopeNorm::linf(3), 18}};
    for (const auto& c : cases) {
        Stopwatch each;
        MinkowskiTight gen = gen_minkowski_tight(c.norm);
        ok &= gen.report.ok;
        ok &= gen.family.size() == c.members;
        ok &= gen.report.subsets_checked == c.members;
        ok &= gen.report.full_diameter <= 2;
        if (gen.report.unbounded_subsets < gen.report.subsets_checked)
            ok &= gen.report.min_subset_diameter > 2;
        ok &= each.seconds() < 60.0;
    }
    report(3, "kd-1 subsets exceed the bound the full family meets", ok, watch.seconds());
    CHECK(ok);
}

TEST_CASE("criterion 4: width transfer for 2d-subsets plus lift equivalence") {
    Stopwatch watch;
    bool ok = true;
    std::mt19937_64 rng(4004);
    int hypothesis_true = 0;

    for (int trial = 0; trial < 500; ++trial) {
        int d = trial < 300 ? 2 : 3;
        RatVec v = rand_point(rng, d, -3, 3, 1);
        if (is_zero(v)) v = unit_axis(d, 0);
        RatVec w = scale(1 / squared_norm(v), v);
        RatVec p = rand_point(rng, d, -2, 2, 2);
        std::vector<RatVec> seg{p, add(p, w)};
        std::uniform_int_distribution<int> nm(2 * d + 1, 2 * d + 3);
        int n = nm(rng);
        Family family(d);
        bool planted = trial % 2 == 0;
        for (int i = 0; i < n; ++i) {
            HPolytope body = planted ? rand_polytope_containing(rng, d, seg)
                                     : rand_polytope(rng, d);
            family.add("m" + std::to_string(i), ConvexBody(std::move(body)));
        }
        FractionalReport rep = check_helly(family, 2 * d, PredVWidthAtLeast{v, Rational(1)});
        if (rep.alpha == 1) {
            ++hypothesis_true;
            if (!rep.conclusion.value_or(false)) ok = false;
        }
        if (rep.conclusion.has_value() && !*rep.conclusion && rep.alpha == 1) ok = false;
    }
    ok &= hypothesis_true >= 200;

    // lift nonempty exactly when the width reaches 1
    for (int trial = 0; trial < 200; ++trial) {
        int d = 2 + trial % 2;
        HPolytope body = rand_polytope(rng, d);
        RatVec v = rand_point(rng, d, -3, 3, 1);
        if (is_zero(v)) v = unit_axis(d, 1);
        WidthCertificate wc = v_width(body, v);
        if (!wc.ok()) {
            ok = false;
            continue;
        }
        LiftedBody lift = lift_width(body, v);
        bool nonempty =
            intersection_nonempty(lift.lifted_dim(), std::span<const ConvexBody>(&lift.lifted, 1));
        ok &= nonempty == (wc.value >= 1);
    }

    double total = watch.seconds();
    ok &= total < 300.0;
    report(4, "2d-subset width hypothesis transfers (500 families, 200 lifts)", ok, total);
    CHECK(ok);
}

TEST_CASE("criterion 5: box-norm diameter transfer at kd subsets") {
    Stopwatch watch;
    bool ok = true;
    std::mt19937_64 rng(5005);
    PolytopeNorm linf = PolytopeNorm::linf(2);
    MinkowskiTight tight = gen_minkowski_tight(linf);
    int hypothesis_true = 0;

    for (int trial = 0; trial < 200; ++trial) {
        Family family(2);
        if (trial % 10 == 9) {
            // scaled tight families: factor 1/2 keeps the hypothesis alive,
            // factor 1/3 breaks it
            Rational factor = (trial % 20 == 9) ? rat(1, 2) : rat(1, 3);
            family = scaled_tight_family(tight, factor);
        } else {
            RatVec p = rand_point(rng, 2, -2, 2, 2);
            std::vector<RatVec> seg{p, add(p, unit_axis(2, 0))};
            std::uniform_int_distribution<int> nm(9, 10);
            int n = nm(rng);
            bool planted = trial % 2 == 0;
            for (int i = 0; i < n; ++i) {
                HPolytope body = planted ? rand_polytope_containing(rng, 2, seg)
                                         : rand_polytope(rng, 2);
                family.add("m" + std::to_string(i), ConvexBody(std::move(body)));
            }
        }
        int m = std::min<int>(8, static_cast<int>(family.size()));
        FractionalReport rep = check_helly(family, m, PredDiameterAtLeast{linf, Rational(1)});
        if (rep.alpha == 1) {
            ++hypothesis_true;
            if (!rep.conclusion.value_or(false)) ok = false;
        }
    }
    ok &= hypothesis_true >= 80;

    double total = watch.seconds();
    ok &= total < 300.0;
    report(5, "kd-subset box-norm hypothesis transfers (200 families)", ok, total);
    CHECK(ok);
}

TEST_CASE("criterion 6: Euclidean relaxation through the box norm") {
    Stopwatch watch;
    bool ok = true;
    std::mt19937_64 rng(6006);
    int hypothesis_true = 0;

    for (int trial = 0; trial < 100; ++trial) {
        Family family(2);
        RatVec p = rand_point(rng, 2, -2, 2, 2);
        RatVec unit{rat(3, 5), rat(4, 5)};  // exact Euclidean unit step
        std::vector<RatVec> seg{p, add(p, unit)};
        bool planted = trial % 2 == 0;
        for (int i = 0; i < 9; ++i) {
            HPolytope body = planted ? rand_polytope_containing(rng, 2, seg)
                                     : rand_polytope(rng, 2);
            family.add("m" + std::to_string(i), ConvexBody(std::move(body)));
        }
        FractionalReport rep =
            check_helly(family, 8, PredDiameterAtLeast{std::nullopt, Rational(1)});
        if (rep.errors > 0) {
            ok = false;
            continue;
        }
        if (rep.alpha == 1) {
            ++hypothesis_true;
            // squared Euclidean diameter of the full intersection >= 1/2
            if (rep.conclusion_unbounded) continue;
            if (!rep.conclusion_value || *rep.conclusion_value < rat(1, 2)) ok = false;
        }
    }
    ok &= hypothesis_true >= 40;

    double total = watch.seconds();
    report(6, "Euclidean diameter keeps d^{-1/2} after 2d^2 subsets (100 families)", ok, total);
    CHECK(ok);
}

TEST_CASE("criterion 7: iterative lower-bound certificates") {
    Stopwatch watch;
    bool ok = true;
    std::mt19937_64 rng(7007);
    PolytopeNorm linf = PolytopeNorm::linf(2);
    MinkowskiTight tight = gen_minkowski_tight(linf);

    for (int fam_idx = 0; fam_idx < 20; ++fam_idx) {
        Family family(2);
        if (fam_idx < 10) {
            family = scaled_tight_family(tight, rat(1, 2));
        } else {
            RatVec p = rand_point(rng, 2, -2, 2, 2);
            std::vector<RatVec> seg{p, add(p, unit_axis(2, fam_idx % 2))};
            for (int i = 0; i < 8; ++i) {
                HPolytope slab(2);
                RatVec a = rand_point(rng, 2, -2, 2, 1);
                if (is_zero(a)) a = unit_axis(2, 0);
                Rational hi = std::max(dot(a, seg[0]), dot(a, seg[1]));
                Rational lo = std::min(dot(a, seg[0]), dot(a, seg[1]));
                slab.add(a, hi + qtest::rand_rat(rng, 0, 2, 2));
                slab.add(negate(a), -(lo - qtest::rand_rat(rng, 0, 2, 2)));
                family.add("slab" + std::to_string(i), ConvexBody(std::move(slab)));
            }
        }
        DiameterCertificate cert = certify_diameter(family, linf, 20);
        if (cert.refused) {
            ok = false;
            continue;
        }
        WidthCertificate true_diam = rho_diameter(2, family.bodies, linf);
        Rational prev(0);
        if (cert.steps.size() != 20) ok = false;
        for (const auto& s : cert.steps) {
            if (!(s.beta >= rat(s.n, s.n + 1))) ok = false;
            if (!(s.beta >= prev)) ok = false;
            if (true_diam.ok() && !(s.beta <= true_diam.value)) ok = false;
            prev = s.beta;
        }
    }

    double total = watch.seconds();
    ok &= total < 120.0;
    report(7, "certificate sequence beta_n >= n/(n+1), bounded by the true diameter", ok, total);
    CHECK(ok);
}

TEST_CASE("criterion 8: analytic quantities") {
    Stopwatch watch;
    bool ok = true;

    GammaEval g = eval_gamma(0.01, 200);
    ok &= g.value > 0.97;

    double prev = 2.0;
    for (int i = 0; i < 50; ++i) {
        double c = 0.05 + (1.3 - 0.05) * i / 49.0;
        double v = eval_gamma(c, 120).value;
        ok &= v > 0.0;
        ok &= v <= prev + 1e-12;
        prev = v;
    }

    double segment = (M_PI / 3.0 - std::sqrt(3.0) / 4.0) / M_PI;
    ok &= std::fabs(cap_fraction(2, 0.5) - segment) < 1e-9;

    std::mt19937_64 rng(8008);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::uniform_int_distribution<int> ddist(2, 8);
    for (int pair = 0; pair < 10; ++pair) {
        int d = ddist(rng);
        double h = unif(rng) * 0.9;
        double p = cap_fraction(d, h);
        const std::size_t samples = 10'000'000;
        std::size_t hits = 0;
        for (std::size_t s = 0; s < samples; ++s) {
            double first = gauss(rng);
            double norm_sq = first * first;
            for (int i = 1; i < d; ++i) {
                double x = gauss(rng);
                norm_sq += x * x;
            }
            double r = std::pow(unif(rng), 1.0 / d);
            if (r * first >= h * std::sqrt(norm_sq)) ++hits;
        }
        double est = static_cast<double>(hits) / samples;
        double sigma = std::sqrt(std::max(p * (1.0 - p), 1e-12) / samples);
        ok &= std::fabs(est - p) <= 3.0 * sigma + 1e-9;
    }

    ok &= std::fabs(unit_volume_ball_radius(2) - 1.0 / std::sqrt(M_PI)) < 1e-12;
    ok &= beta_fractional(1.0, 0.01, 2, false).value > 0.55;

    double total = watch.seconds();
    ok &= total < 120.0;
    report(8, "cap volumes, truncated infimum, ball radius, beta", ok, total);
    CHECK(ok);
}

TEST_CASE("criterion 9: smooth-ball demonstration family") {
    Stopwatch watch;
    bool ok = true;
    NonpolytopeDemo gen = gen_nonpolytope_demo(3, 12);
    ok &= gen.report.ok;
    ok &= gen.report.subsets_checked == 220;
    ok &= gen.report.full_sq < 1;
    ok &= gen.report.unbounded_subsets < gen.report.subsets_checked
              ? gen.report.min_subset_sq >= 1
              : true;
    double total = watch.seconds();
    ok &= total < 60.0;
    report(9, "disk tangent family: triples reach 1, full stays below", ok, total);
    CHECK(ok);
}

TEST_CASE("criterion 10: partition witnesses on random instances") {
    Stopwatch watch;
    bool ok = true;
    std::mt19937_64 rng(1010);
    for (int trial = 0; trial < 10'000; ++trial) {
        int d = 1 + trial % 4;
        std::uniform_int_distribution<int> extra(0, 2);
        int n = d + 2 + extra(rng);
        std::vector<RatVec> pts;
        for (int i = 0; i < n; ++i) pts.push_back(rand_point(rng, d, -8, 8));
        RadonPartition r = radon_partition(pts);
        if (r.part_a.empty() || r.part_b.empty()) {
            ok = false;
            continue;
        }
        if (!member(r.witness, VBody(d, r.part_a))) ok = false;
        if (!member(r.witness, VBody(d, r.part_b))) ok = false;
    }
    double total = watch.seconds();
    ok &= total < 60.0;
    report(10, "10^4 partition witnesses pass both hull memberships", ok, total);
    CHECK(ok);
}
