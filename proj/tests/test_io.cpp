#include "doctest.h"
#include "helpers.hpp"

#include "jug/io.hpp"

using namespace jug;
using namespace jug::testing;

TEST_CASE("polynomial JSON round trip") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        const BiPoly p = random_poly(rng, 4, 5);
        CHECK(poly_from_json(poly_json(p)) == p);
    }
    CHECK(poly_json(BiPoly(0)).dump() == "[]");
    const json j = poly_json(BiPoly::linear(Rational(-7, 2), 6));
    CHECK(j.dump() == R"([[0,1,"6","1"],[1,0,"-7","2"]])");
    CHECK_THROWS_AS(poly_from_json(json::parse(R"([[0,-1,"1","1"]])")), TextParseError);
    CHECK_THROWS_AS(poly_from_json(json::parse(R"([[0]])")), TextParseError);
}

TEST_CASE("class JSON round trip, zeros omissible on input") {
    const auto g = MomentGraph::build(3);
    const CohClass f = build_xi(g, 2);
    CHECK(cohclass_from_json(cohclass_json(f)) == f);

    const json sparse = {{"m", 3}, {"values", json::array({{{"q", -2}, {"poly", poly_json(BiPoly(5))}}})}};
    const CohClass fs = cohclass_from_json(sparse);
    CHECK(fs.at(-2) == BiPoly(5));
    CHECK(fs.at(0).is_zero());

    json out = cohclass_json(f);
    CHECK(out["values"].size() == 7);  // canonical output keeps explicit zeros
    CHECK_THROWS_AS(cohclass_from_json(json{{"m", 3}, {"values", json::array({{{"q", 9}, {"poly", json::array()}}})}}),
                    UnknownVertex);
    CHECK_THROWS_AS(cohclass_from_json(json{{"m", 0}, {"values", json::array()}}), InvalidM);
}

TEST_CASE("graph exports") {
    const auto g = MomentGraph::build(4);
    const json j = graph_json(g);
    CHECK(j["m"] == 4);
    CHECK(j["vertices"].size() == 9);
    CHECK(j["edges"].size() == 20);
    CHECK(j["vertices"][0]["pair"] == json::array({8, 0}));
    CHECK(poly_from_json(j["vertices"][0]["weight"]) == g.weight(-4));

    const std::string dot = graph_dot(g);
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("\"(8,0)\" -> \"(7,1)\" [label=\"3/1*a^0*d^1+-1/1*a^1*d^0\"];") != std::string::npos);
    CHECK(dot.find("\"(4,4)\";") != std::string::npos);
}

TEST_CASE("kt table CSV matches the golden grid byte for byte") {
    for (const int m : {4, 5}) {
        const auto fam = KTFamily::build(MomentGraph::build(m));
        CHECK(kt_table_csv(fam) == slurp(data_file("kt_table_m" + std::to_string(m) + ".csv")));
    }
}

TEST_CASE("kt table JSON layout") {
    const auto fam = KTFamily::build(MomentGraph::build(4));
    const json j = kt_table_json(fam);
    CHECK(j["rows"].size() == 9);
    CHECK(j["rows"][0]["class"] == "xi(8,0)");
    CHECK(j["rows"][8]["class"] == "xi(4,4)");
    CHECK(j["columns"][0]["vertex"] == "(8,0)");
    CHECK(j["columns"][1]["vertex"] == "(0,8)");
}

TEST_CASE("expansion and constants rendering") {
    const auto fam = KTFamily::build(MomentGraph::build(4));
    const Expansion e = structure_constants(fam, 1, -1);
    const json j = expansion_json(e);
    CHECK(j["m"] == 4);
    CHECK(j["integral"] == true);
    CHECK(j["coeffs"].size() == 9);
    CHECK(constants_csv(1, -1, e) == "1,-1,-2,1/1*a^0*d^0\n1,-1,2,1/1*a^0*d^0\n");
}

TEST_CASE("report serializers") {
    const auto g = MomentGraph::build(4);
    const auto fam = KTFamily::build(g);

    CohClass bad = fam.cls(1);
    bad.set(-4, BiPoly(1));
    const json vio = violations_json(verify_gkm(g, bad));
    CHECK(vio.size() == 4);
    CHECK(vio[0]["source_q"] == -4);

    const json axioms = axiom_report_json(verify_kt_axioms(g, fam));
    CHECK(axioms["all_ok"] == true);
    CHECK(axioms["entries"].size() == 9);

    const json rels = relation_report_json(check_all(fam));
    CHECK(rels["all_pass"] == true);

    const json stab = stability_json(stability_check(3, 4));
    CHECK(stab["pass"] == true);
    CHECK(stab["m1"] == 3);
}
