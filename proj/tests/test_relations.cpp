#include "doctest.h"
#include "helpers.hpp"

#include "jug/relations.hpp"

using namespace jug;

namespace {
CheckResult run(const KTFamily& fam, Relation tag, std::optional<int> q = std::nullopt) {
    return check(fam, RelationId{tag, q});
}
}  // namespace

TEST_CASE("the worked m=4 identities") {
    const auto fam = KTFamily::build(MomentGraph::build(4));
    CHECK(run(fam, Relation::P3_5).pass);         // xi(5,3)*xi(3,5) = xi(6,2)+xi(2,6)
    CHECK(run(fam, Relation::C3_9).pass);         // xi(5,3)(xi(5,3)+a) = 2 xi(2,6) and mirror
    CHECK(run(fam, Relation::P3_8, 1).pass);
    CHECK(run(fam, Relation::P3_8, 3).pass);
    CHECK(run(fam, Relation::P3_10, 2).pass);
    CHECK(run(fam, Relation::P3_11, 2).pass);
    CHECK(run(fam, Relation::P3_12, 1).pass);
    CHECK(run(fam, Relation::P3_12, 3).pass);
    for (int q = 0; q <= 4; ++q) CHECK(run(fam, Relation::P3_6, q).pass);
    for (int q = 1; q <= 4; ++q) CHECK(run(fam, Relation::T4_2, q).pass);
    CHECK(run(fam, Relation::P4_4).pass);
    CHECK(run(fam, Relation::P4_5).pass);

    // the q=1 special case spelled out in the worked example:
    // xi(5,3)(xi(5,3) - p) = 2 xi(2,6) with p = -a
    const CohClass lhs = fam.cls(1) * (fam.cls(1) - const_class(fam.graph(), fam.p_value(1, -1)));
    CHECK(lhs == fam.cls(-2).scaled(Rational(2)));
}

TEST_CASE("the worked m=5 identities") {
    const auto fam = KTFamily::build(MomentGraph::build(5));
    // xi(8,2)(xi(6,4) - p^{(8,2)}_{(6,4)}) = 4 xi(1,9)
    const CohClass lhs = fam.cls(3) * (fam.cls(1) - const_class(fam.graph(), fam.p_value(1, -3)));
    CHECK(lhs == fam.cls(-4).scaled(Rational(4)));
    CHECK(run(fam, Relation::P3_8, 3).pass);
}

TEST_CASE("all admissible instances pass for small m") {
    for (int m = 1; m <= 6; ++m) {
        const auto fam = KTFamily::build(MomentGraph::build(m));
        const auto report = check_all(fam);
        CHECK(report.all_pass());
        CHECK(report.results.size() == admissible_instances(m).size());
    }
}

TEST_CASE("m=1 generates only in-range instances") {
    const auto ids = admissible_instances(1);
    // P3_6 q=0..1, T4_2 q=1, P4_4, P4_5 and nothing needing 0<q<m or m>=2
    REQUIRE(ids.size() == 5);
    for (const auto& id : ids) {
        CHECK(id.tag != Relation::P3_5);
        CHECK(id.tag != Relation::C3_9);
        CHECK(id.tag != Relation::P3_8);
        CHECK(id.tag != Relation::P3_10);
        CHECK(id.tag != Relation::P3_11);
        CHECK(id.tag != Relation::P3_12);
    }
}

TEST_CASE("parameter validation") {
    const auto fam = KTFamily::build(MomentGraph::build(4));
    CHECK_THROWS_AS(run(fam, Relation::P3_8, 2), BadParameters);   // even
    CHECK_THROWS_AS(run(fam, Relation::P3_8, 5), BadParameters);   // q >= m
    CHECK_THROWS_AS(run(fam, Relation::P3_10, 3), BadParameters);  // odd
    CHECK_THROWS_AS(run(fam, Relation::T4_2, 0), BadParameters);
    CHECK_THROWS_AS(run(fam, Relation::T4_2, 5), BadParameters);
    CHECK_THROWS_AS(run(fam, Relation::P4_4, 1), BadParameters);   // no parameter expected
    CHECK_THROWS_AS(run(fam, Relation::P3_6, std::nullopt), BadParameters);

    const auto fam1 = KTFamily::build(MomentGraph::build(1));
    CHECK_THROWS_AS(run(fam1, Relation::P3_5), BadParameters);  // needs m >= 2
}

TEST_CASE("a perturbed family yields a counterexample with the offending vertex") {
    const auto g = MomentGraph::build(4);
    auto fam = KTFamily::build(g);
    std::vector<CohClass> classes;
    for (int r = -4; r <= 4; ++r) classes.push_back(fam.cls(r));
    // poison xi(5,3) at its own vertex (5,3): -a becomes -a+1
    classes[1 + 4].set(-1, BiPoly::linear(-1, 0) + BiPoly(1));
    const KTFamily bad(g, std::move(classes));

    const auto res = run(bad, Relation::P4_4);
    CHECK(!res.pass);
    REQUIRE(res.counterexample);
    CHECK(res.counterexample->lhs != res.counterexample->rhs);

    const auto c39 = run(bad, Relation::C3_9);
    CHECK(!c39.pass);
    REQUIRE(c39.counterexample);
    CHECK(c39.counterexample->part == "minus");  // the xi(5,3) branch
    CHECK(c39.counterexample->vertex == -4);     // first vertex where the sides differ

    CHECK(!check_all(bad).all_pass());
}

TEST_CASE("check_all is deterministic across thread counts") {
    const auto fam = KTFamily::build(MomentGraph::build(5));
    const auto seq = check_all(fam, 1);
    const auto par = check_all(fam, 4);
    REQUIRE(seq.results.size() == par.results.size());
    for (std::size_t i = 0; i < seq.results.size(); ++i) {
        CHECK(seq.results[i].id.tag == par.results[i].id.tag);
        CHECK(seq.results[i].id.q == par.results[i].id.q);
        CHECK(seq.results[i].pass == par.results[i].pass);
    }
}
