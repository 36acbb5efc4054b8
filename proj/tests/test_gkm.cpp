#include "doctest.h"
#include "helpers.hpp"

#include "jug/gkm.hpp"
#include "jug/kt_basis.hpp"

using namespace jug;
using jug::testing::random_poly;

TEST_CASE("const classes are always GKM") {
    const auto g = MomentGraph::build(4);
    for (const BiPoly& tau : {BiPoly(1), BiPoly(0), BiPoly::delta(), BiPoly::alpha() * BiPoly::delta()}) {
        const CohClass f = const_class(g, tau);
        for (int q = -4; q <= 4; ++q) CHECK(f.at(q) == tau);
        CHECK(verify_gkm(g, f).empty());
    }
    CHECK(const_class(g, BiPoly(1)) == build_xi(g, 0));
}

TEST_CASE("class operations are pointwise") {
    const auto g = MomentGraph::build(4);
    const CohClass xi = build_xi(g, 1);
    CHECK(xi + CohClass(4) == xi);
    // xi(5,3) * xi(3,5) at (8,0): 2(-a+d) * 2(-a+2d)
    const CohClass prod = xi * build_xi(g, -1);
    const BiPoly expected = BiPoly::linear(-1, 1).scaled(2) * BiPoly::linear(-1, 2).scaled(2);
    CHECK(prod.at(-4) == expected);
    CHECK(build_xi(g, 0).scaled(BiPoly::delta()) == const_class(g, BiPoly::delta()));

    CHECK_THROWS_AS(xi + CohClass(5), DimensionMismatch);
    CHECK_THROWS_AS(xi.at(7), UnknownVertex);
}

TEST_CASE("verify_gkm flags a tampered class with every offending edge") {
    const auto g = MomentGraph::build(4);
    CohClass f = build_xi(g, 1);
    f.set(-4, BiPoly(1));  // corrupt the value at (8,0)
    const auto violations = verify_gkm(g, f);
    REQUIRE(violations.size() == 4);  // all four edges out of (8,0)
    const auto& first = violations.front();
    CHECK(first.edge.source == -4);
    CHECK(first.edge.target == -3);
    CHECK(first.edge.label == BiPoly::linear(-1, 3));
    // residue 1 - 2(-a+d) = 1 + 2a - 2d
    CHECK(first.difference == BiPoly(1) + BiPoly::linear(2, -2));
    CHECK(!BiPoly::try_div(first.difference, first.edge.label));
}

TEST_CASE("verify_gkm validates dimensions and is thread-count independent") {
    const auto g = MomentGraph::build(4);
    CHECK_THROWS_AS(verify_gkm(g, CohClass(5)), DimensionMismatch);

    CohClass f = build_xi(g, 2);
    f.set(0, BiPoly::alpha());
    const auto seq = verify_gkm(g, f, 1);
    const auto par = verify_gkm(g, f, 4);
    REQUIRE(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq[i].edge.source == par[i].edge.source);
        CHECK(seq[i].edge.target == par[i].edge.target);
        CHECK(seq[i].difference == par[i].difference);
    }
}

TEST_CASE("GKM closure under sum, product and scaling") {
    std::mt19937_64 rng(2024);
    for (int m = 2; m <= 8; m += 2) {
        const auto g = MomentGraph::build(m);
        const auto fam = KTFamily::build(g);
        std::uniform_int_distribution<int> idx(-m, m);
        for (int trial = 0; trial < 6; ++trial) {
            const CohClass& x = fam.cls(idx(rng));
            const CohClass& y = fam.cls(idx(rng));
            CHECK(verify_gkm(g, x + y).empty());
            CHECK(verify_gkm(g, x * y).empty());
            CHECK(verify_gkm(g, x.scaled(random_poly(rng, 2, 3))).empty());
        }
    }
}
