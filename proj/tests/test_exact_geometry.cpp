#include <doctest.h>

#include "qhelly/constructions.hpp"
#include "qhelly/lp.hpp"
#include "qhelly/radon.hpp"
#include "qhelly/vertices.hpp"
#include "test_util.hpp"

using namespace qhelly;
using qtest::rand_point;
using qtest::rand_polytope;
using qtest::unit_axis;
using qtest::unit_box;

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(parse_rational("3/6")) == "1/2");
    CHECK(to_string(parse_rational("-4/8")) == "-1/2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK(parse_rational("0.25") == rat(1, 4));
    CHECK(parse_rational("-0.2") == rat(-1, 5));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK(floor_int(rat(-3, 2)) == -2);
    CHECK(ceil_int(rat(-3, 2)) == -1);
}

TEST_CASE("lp_solve on the unit square") {
    HPolytope square = unit_box(2);
    LPResult r = lp_solve(unit_axis(2, 0), Sense::Max, square);
    REQUIRE(r.optimal());
    CHECK(*r.optimum == 1);
    CHECK((*r.witness)[0] == 1);
    CHECK((*r.witness)[1] >= 0);
    CHECK((*r.witness)[1] <= 1);
}

TEST_CASE("lp_solve detects infeasibility and unboundedness") {
    HPolytope contradictory(1);
    contradictory.add({Rational(1)}, Rational(0));    // x <= 0
    contradictory.add({Rational(-1)}, Rational(-1));  // x >= 1
    CHECK(lp_solve({Rational(1)}, Sense::Max, contradictory).status == LPStatus::Infeasible);

    HPolytope half(2);
    half.add({Rational(0), Rational(1)}, Rational(0));  // y <= 0
    CHECK(lp_solve(unit_axis(2, 0), Sense::Max, half).status == LPStatus::Unbounded);
}

TEST_CASE("lp_solve rejects dimension mismatch") {
    CHECK_THROWS_AS(lp_solve({Rational(1)}, Sense::Max, unit_box(2)), DimensionMismatch);
}

TEST_CASE("LP witnesses are exact and min agrees with negated max") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 120; ++trial) {
        int d = 1 + static_cast<int>(trial % 4);
        HPolytope body = rand_polytope(rng, d);
        RatVec c = rand_point(rng, d, -5, 5);
        LPResult mx = lp_solve(c, Sense::Max, body);
        REQUIRE(mx.optimal());
        for (const auto& hs : body.constraints) CHECK(dot(hs.normal, *mx.witness) <= hs.offset);
        CHECK(dot(c, *mx.witness) == *mx.optimum);

        LPResult mn = lp_solve(c, Sense::Min, body);
        REQUIRE(mn.optimal());
        CHECK(*mn.optimum <= *mx.optimum);
        LPResult neg = lp_solve(negate(c), Sense::Max, body);
        REQUIRE(neg.optimal());
        CHECK(*mn.optimum == -*neg.optimum);
        for (const auto& hs : body.constraints) CHECK(dot(hs.normal, *mn.witness) <= hs.offset);
    }
}

TEST_CASE("intersect concatenates constraints") {
    HPolytope a = unit_box(2);
    RatVec half{rat(1, 2), rat(1, 2)};
    RatVec threehalf{rat(3, 2), rat(3, 2)};
    HPolytope b = box(half, threehalf);
    HPolytope both = intersect({a, b});
    CHECK(both.constraints.size() == a.constraints.size() + b.constraints.size());
    auto verts = vertices(both);
    REQUIRE(verts.size() == 4);
    CHECK(verts.front() == RatVec{rat(1, 2), rat(1, 2)});
    CHECK(verts.back() == RatVec{Rational(1), Rational(1)});

    HPolytope same = intersect({a});
    CHECK(same.constraints.size() == a.constraints.size());

    CHECK_THROWS_AS(intersect(std::vector<HPolytope>{}), std::invalid_argument);
}

TEST_CASE("membership by substitution and by convex coefficients") {
    VBody square(2, {{Rational(0), Rational(0)},
                     {Rational(1), Rational(0)},
                     {Rational(0), Rational(1)},
                     {Rational(1), Rational(1)}});
    CHECK(member({rat(1, 2), rat(1, 2)}, square));
    VBody segment(2, {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}});
    CHECK_FALSE(member({Rational(2), Rational(0)}, segment));
}

TEST_CASE("hull family of the tight lattice construction") {
    DiscreteTight gen = gen_discrete_tight(2);
    const Family& family = gen.family;
    REQUIRE(family.size() == 8);
    RatVec one_one{Rational(1), Rational(1)};
    for (const auto& body : family.bodies) CHECK(member(one_one, body));
    // (0,2) is omitted from exactly one member, so it leaves the intersection
    RatVec corner{Rational(0), Rational(2)};
    bool everywhere = true;
    for (const auto& body : family.bodies)
        if (!member(corner, body)) everywhere = false;
    CHECK_FALSE(everywhere);
}

TEST_CASE("vertex enumeration on standard bodies") {
    auto square = vertices(unit_box(2));
    REQUIRE(square.size() == 4);

    HPolytope empty(2);
    empty.add({Rational(1), Rational(0)}, Rational(0));
    empty.add({Rational(-1), Rational(0)}, Rational(-1));
    CHECK(vertices(empty).empty());

    HPolytope cross(2);
    for (int sx : {-1, 1})
        for (int sy : {-1, 1}) cross.add({Rational(sx), Rational(sy)}, Rational(1));
    auto diamond = vertices(cross);
    REQUIRE(diamond.size() == 4);
    CHECK(diamond.front() == RatVec{Rational(-1), Rational(0)});

    HPolytope half(2);
    half.add({Rational(0), Rational(1)}, Rational(0));
    CHECK_THROWS_AS(vertices(half), UnboundedBody);
}

TEST_CASE("vertex maxima equal LP optima") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int d = 2 + static_cast<int>(trial % 3);
        HPolytope body = rand_polytope(rng, d);
        auto verts = vertices(body);
        REQUIRE(!verts.empty());
        for (int rep = 0; rep < 3; ++rep) {
            RatVec c = rand_point(rng, d, -4, 4);
            LPResult r = lp_solve(c, Sense::Max, body);
            REQUIRE(r.optimal());
            Rational best = dot(c, verts.front());
            for (const auto& v : verts) {
                Rational val = dot(c, v);
                if (val > best) best = val;
            }
            CHECK(best == *r.optimum);
        }
    }
}

TEST_CASE("radon partition of the square corners") {
    std::vector<RatVec> pts{{Rational(0), Rational(0)},
                            {Rational(1), Rational(0)},
                            {Rational(0), Rational(1)},
                            {Rational(1), Rational(1)}};
    RadonPartition r = radon_partition(pts);
    CHECK(r.witness == RatVec{rat(1, 2), rat(1, 2)});
    CHECK(r.part_a.size() + r.part_b.size() == 4);
    CHECK(member(r.witness, VBody(2, r.part_a)));
    CHECK(member(r.witness, VBody(2, r.part_b)));
}

TEST_CASE("radon partition with a colinear triple") {
    std::vector<RatVec> pts{{Rational(0), Rational(0)},
                            {Rational(1), Rational(0)},
                            {Rational(2), Rational(0)},
                            {Rational(0), Rational(1)}};
    RadonPartition r = radon_partition(pts);
    CHECK(r.witness == RatVec{Rational(1), Rational(0)});
    CHECK(member(r.witness, VBody(2, r.part_a)));
    CHECK(member(r.witness, VBody(2, r.part_b)));
}

TEST_CASE("radon rejects too few points") {
    std::vector<RatVec> pts{{Rational(0), Rational(0)}, {Rational(1), Rational(1)}};
    CHECK_THROWS_AS(radon_partition(pts), std::invalid_argument);
}

TEST_CASE("radon witness lies in both hulls on random instances") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        int d = 1 + static_cast<int>(trial % 4);
        std::uniform_int_distribution<int> extra(0, 2);
        int n = d + 2 + extra(rng);
        std::vector<RatVec> pts;
        for (int i = 0; i < n; ++i) pts.push_back(rand_point(rng, d, -6, 6));
        RadonPartition r = radon_partition(pts);
        REQUIRE(!r.part_a.empty());
        REQUIRE(!r.part_b.empty());
        CHECK(member(r.witness, VBody(d, r.part_a)));
        CHECK(member(r.witness, VBody(d, r.part_b)));
    }
}
