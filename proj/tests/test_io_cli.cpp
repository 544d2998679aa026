#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qhelly/io.hpp"
#include "test_util.hpp"

using namespace qhelly;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(QHELLY_CLI_PATH) + " " + args;
    return std::system(cmd.c_str());
}

}  // namespace

TEST_CASE("family files round-trip byte for byte") {
    Family family(2);
    HPolytope h(2);
    h.add({rat(2, 3), Rational(-1)}, rat(7, 5));
    h.add({Rational(0), Rational(1)}, Rational(4));
    family.add("halves", ConvexBody(std::move(h)));
    family.add("hull", ConvexBody(VBody(2, {{rat(1, 2), Rational(0)}, {Rational(3), rat(-5, 7)}})));

    json j1 = family_to_json(family);
    Family back = family_from_json(j1);
    json j2 = family_to_json(back);
    CHECK(j1.dump() == j2.dump());
    CHECK(back.ids == family.ids);
    CHECK(back.bodies[0].h().constraints[0].normal[0] == rat(2, 3));
    CHECK(back.bodies[1].v().points[1][1] == rat(-5, 7));
}

TEST_CASE("norm serialization keeps the name tag") {
    PolytopeNorm l1 = PolytopeNorm::l1(2);
    json j = norm_to_json(l1);
    PolytopeNorm back = norm_from_json(j);
    CHECK(back.name() == "l1");
    CHECK(back.functionals() == l1.functionals());
    CHECK(norm_to_json(back).dump() == j.dump());
}

TEST_CASE("witness serialization shape") {
    LatticeWitness w{{Integer(1), Integer(2)}, {Integer(0), Integer(1)}, 3};
    json j = witness_to_json(w);
    CHECK(j["base"] == json::array({1, 2}));
    CHECK(j["step"] == json::array({0, 1}));
    CHECK(j["k"] == 3);
}

TEST_CASE("cli generates, checks, and reports deterministically") {
    const std::string dir = "/tmp/qhelly_cli_test";
    std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
    const std::string fam = dir + "/family.json";
    const std::string ver = dir + "/verify.json";
    const std::string rep1 = dir + "/report1.json";
    const std::string rep2 = dir + "/report2.json";

    CHECK(run_cli("generate --construction discrete-tight --params d=1 --out " + fam +
                  " --verify-out " + ver) == 0);
    json verification = read_json_file(ver);
    CHECK(verification["ok"] == true);

    CHECK(run_cli("check --family " + fam + " --subset-size 1 --predicate colinear --k 3 --out " +
                  rep1) == 0);
    json report = read_json_file(rep1);
    CHECK(report["alpha"] == "1");
    CHECK(report["conclusion"] == false);

    // re-reading and re-checking reproduces the report byte for byte
    CHECK(run_cli("check --family " + fam + " --subset-size 1 --predicate colinear --k 3 --out " +
                  rep2) == 0);
    CHECK(slurp(rep1) == slurp(rep2));

    CHECK(run_cli("lattice --family " + fam + " --k 3 --out " + dir + "/lattice.json") == 0);
    json lattice = read_json_file(dir + "/lattice.json");
    CHECK(lattice["found"] == false);

    CHECK(run_cli("diameter --family " + fam + " --norm linf --out " + dir + "/diam.json") == 0);
    json diam = read_json_file(dir + "/diam.json");
    CHECK(diam["status"] == "ok");
    CHECK(diam["value"] == "1");  // the intersection is the segment [1, 2]
}

TEST_CASE("cli signals usage errors and verification failures") {
    CHECK(run_cli("check --predicate nonempty 2>/dev/null") != 0);
    CHECK(run_cli("generate --construction unknown-thing 2>/dev/null") != 0);
    CHECK(run_cli("nonsense-subcommand 2>/dev/null") != 0);
}

TEST_CASE("cli analytic commands") {
    const std::string dir = "/tmp/qhelly_cli_test";
    std::system(("mkdir -p " + dir).c_str());
    CHECK(run_cli("gamma --c 0.01 --dmax 50 --out " + dir + "/gamma.json") == 0);
    json g = read_json_file(dir + "/gamma.json");
    CHECK(g["value"].get<double>() > 0.9);
    CHECK(g["truncated_inf"] == true);

    CHECK(run_cli("beta --alpha 1 --c 0.01 --d 2 --out " + dir + "/beta.json") == 0);
    json b = read_json_file(dir + "/beta.json");
    CHECK(b["beta"].get<double>() > 0.55);
}

TEST_CASE("cli colorful check") {
    const std::string dir = "/tmp/qhelly_cli_test";
    std::system(("mkdir -p " + dir).c_str());
    for (int c = 0; c < 2; ++c) {
        Family f(2);
        f.add("b", ConvexBody(qtest::unit_box(2)));
        write_json_file(dir + "/color" + std::to_string(c) + ".json", family_to_json(f));
    }
    CHECK(run_cli("check --predicate vwidth --v 1,0 --threshold 1 --colorful " + dir +
                  "/color0.json " + dir + "/color1.json --out " + dir + "/colorful.json") == 0);
    json rep = read_json_file(dir + "/colorful.json");
    CHECK(rep["hypothesis_all"] == true);
    CHECK(rep["concluding_colors"].size() == 2);
}

TEST_CASE("cli certificate and its refusal exit code") {
    const std::string dir = "/tmp/qhelly_cli_test";
    std::system(("mkdir -p " + dir).c_str());
    Family ball(2);
    ball.add("ball", ConvexBody(PolytopeNorm::linf(2).unit_ball()));
    write_json_file(dir + "/ball.json", family_to_json(ball));
    CHECK(run_cli("certify --family " + dir + "/ball.json --norm linf --steps 4 --out " + dir +
                  "/cert.json") == 0);
    json cert = read_json_file(dir + "/cert.json");
    CHECK(cert["refused"] == false);
    CHECK(cert["steps"].size() == 4);
    CHECK(cert["steps"][0]["beta"] == "1/2");

    Family split(2);
    split.add("a", ConvexBody(box(zero_vec(2), {Rational(1), Rational(1)})));
    split.add("b", ConvexBody(box({Rational(9), Rational(9)}, {Rational(10), Rational(10)})));
    write_json_file(dir + "/split.json", family_to_json(split));
    CHECK(run_cli("certify --family " + dir + "/split.json --norm linf --steps 4 2>/dev/null") !=
          0);
}

TEST_CASE("cli generators for the other constructions") {
    const std::string dir = "/tmp/qhelly_cli_test";
    std::system(("mkdir -p " + dir).c_str());
    CHECK(run_cli("generate --construction minkowski-tight --params d=2 norm=linf --out " + dir +
                  "/mink.json --verify-out " + dir + "/mink_verify.json") == 0);
    json mv = read_json_file(dir + "/mink_verify.json");
    CHECK(mv["ok"] == true);
    CHECK(mv["full_diameter"] == "2");
    Family mink = read_family_file(dir + "/mink.json");
    CHECK(mink.size() == 8);

    CHECK(run_cli("generate --construction nonpolytope-demo --params n=3 m=12 --out " + dir +
                  "/demo.json --verify-out " + dir + "/demo_verify.json") == 0);
    json dv = read_json_file(dir + "/demo_verify.json");
    CHECK(dv["ok"] == true);
    CHECK(read_family_file(dir + "/demo.json").size() == 12);
}

TEST_CASE("cli lift kinds") {
    const std::string dir = "/tmp/qhelly_cli_test";
    std::system(("mkdir -p " + dir).c_str());
    Family family(2);
    family.add("sq", ConvexBody(qtest::unit_box(2)));
    write_json_file(dir + "/box2.json", family_to_json(family));

    CHECK(run_cli("lift --family " + dir + "/box2.json --kind discrete --k 3 --out " + dir +
                  "/ldisc.json") == 0);
    json disc = read_json_file(dir + "/ldisc.json");
    CHECK(disc["lift"]["kind"] == "discrete");
    CHECK(disc["lift"]["k"] == 3);

    CHECK(run_cli("lift --family " + dir + "/box2.json --kind boundary --norm linf --facet 1 "
                  "--out " + dir + "/lbound.json") == 0);
    CHECK(read_json_file(dir + "/lbound.json")["lift"]["kind"] == "boundary");

    CHECK(run_cli("lift --family " + dir + "/box2.json --kind product --norm linf --out " + dir +
                  "/lprod.json") == 0);
    json prod = read_json_file(dir + "/lprod.json");
    CHECK(prod["lift"]["kind"] == "product");
    CHECK(prod["dim"] == 8);
}

TEST_CASE("cli lift writes a tagged family file") {
    const std::string dir = "/tmp/qhelly_cli_test";
    std::system(("mkdir -p " + dir).c_str());
    Family family(2);
    family.add("sq", ConvexBody(qtest::unit_box(2)));
    write_json_file(dir + "/box.json", family_to_json(family));
    CHECK(run_cli("lift --family " + dir + "/box.json --kind width --v 1,0 --out " + dir +
                  "/lift.json") == 0);
    json lifted = read_json_file(dir + "/lift.json");
    CHECK(lifted["dim"] == 4);
    CHECK(lifted["lift"]["kind"] == "width");
    Family lifted_family = family_from_json(lifted);
    CHECK(lifted_family.bodies[0].h().constraints.size() == 2 * 4 + 2);
}
