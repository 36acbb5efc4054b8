#include "doctest.h"
#include "helpers.hpp"

#include "jug/io.hpp"
#include "jug/kt_basis.hpp"

#include <cstdlib>

using namespace jug;
using namespace jug::testing;

TEST_CASE("published table values") {
    const auto g4 = MomentGraph::build(4);
    const auto fam4 = KTFamily::build(g4);
    // Table-2 spot checks, row xi(a,b) at column (x,y)
    CHECK(fam4.p_value(1, -4) == linprod(-1, 1, 1, 2));             // xi(5,3) at (8,0): 2(-a+d)
    CHECK(fam4.p_value(2, -2) == linprod(-1, 0, 1));                // xi(6,2) at (6,2): (-a)(-a+d)
    CHECK(fam4.p_value(-2, 4) == linprod(1, 2, 3, 3));              // xi(2,6) at (0,8): 3(a+2d)(a+3d)
    CHECK(fam4.p_value(-1, -2) == BiPoly::linear(-1, 1));           // xi(3,5) at (6,2): -a+d
    CHECK(fam4.p_value(1, -1) == BiPoly::linear(-1, 0));            // diagonal of xi(5,3): -a
    const auto g5 = MomentGraph::build(5);
    const auto fam5 = KTFamily::build(g5);
    CHECK(fam5.p_value(1, -1) == BiPoly::linear(-1, 0));            // xi(6,4) at (6,4): -a
    for (int q = -5; q <= 5; ++q) CHECK(fam5.p_value(0, q) == BiPoly(1));
}

TEST_CASE("full grids reproduce the corrected published tables") {
    for (const int m : {4, 5}) {
        const auto fam = KTFamily::build(MomentGraph::build(m));
        const auto golden = slurp(data_file("kt_table_m" + std::to_string(m) + ".csv"));
        CHECK(kt_table_csv(fam) == golden);
    }
}

TEST_CASE("eight cells of the reference grids are printing errors") {
    // Each printed value is non-homogeneous or GKM-violating as printed; the
    // closed formula (already certified by the axioms below) disagrees with it.
    struct Cell {
        int m, r, q;
        BiPoly printed;
    };
    const std::vector<Cell> typos = {
        {4, -2, -3, linprod(1, 1, 3)},   // xi(2,6) at (7,1)
        {4, -2, 3, linprod(-1, 1, 2)},   // xi(2,6) at (1,7)
        {5, 4, -5, linprod(-1, 0, 4)},   // xi(9,1) at (10,0)
        {5, 4, -4, linprod(-1, 0, 4)},   // xi(9,1) at (9,1)
        {5, -4, 5, linprod(1, 1, 5)},    // xi(1,9) at (0,10)
        {5, -4, 4, linprod(1, 1, 5)},    // xi(1,9) at (1,9)
        {5, -2, -3, linprod(1, 1, 3)},   // xi(3,7) at (8,2)
        {5, -2, 3, linprod(-1, 1, 2)},   // xi(3,7) at (2,8)
    };
    for (const auto& cell : typos) {
        const auto fam = KTFamily::build(MomentGraph::build(cell.m));
        CHECK(fam.p_value(cell.r, cell.q) != cell.printed);
        // the printed value cannot sit in a class homogeneous of degree |r|
        const bool deg_ok = cell.printed.is_homogeneous_of_degree(std::abs(cell.r));
        const bool gkm_ok = [&] {
            CohClass probe = fam.cls(cell.r);
            probe.set(cell.q, cell.printed);
            return verify_gkm(fam.graph(), probe).empty();
        }();
        CHECK((!deg_ok || !gkm_ok));
    }
}

TEST_CASE("index validation") {
    const auto g = MomentGraph::build(3);
    CHECK_THROWS_AS(build_xi(g, 4), IndexOutOfRange);
    const auto fam = KTFamily::build(g);
    CHECK_THROWS_AS(fam.cls(-4), IndexOutOfRange);
    CHECK_THROWS_AS(fam.p_value(1, 9), UnknownVertex);
}

TEST_CASE("homogeneity and support triangularity") {
    for (int m = 1; m <= 8; ++m) {
        const auto g = MomentGraph::build(m);
        const auto fam = KTFamily::build(g);
        for (int r = -m; r <= m; ++r) {
            const CohClass& xi = fam.cls(r);
            CHECK(!fam.diagonal(r).is_zero());
            for (int q = -m; q <= m; ++q) {
                CHECK(xi.at(q).is_homogeneous_of_degree(std::abs(r)));
                if (std::abs(q) < std::abs(r)) CHECK(xi.at(q).is_zero());
            }
            // wrong-side vertex of magnitude |r| (own vertex is -r)
            if (r != 0) CHECK(xi.at(r).is_zero());
        }
    }
}

TEST_CASE("every basis class satisfies the congruences") {
    for (int m = 1; m <= 8; ++m) {
        const auto g = MomentGraph::build(m);
        const auto fam = KTFamily::build(g);
        for (int r = -m; r <= m; ++r) CHECK(verify_gkm(g, fam.cls(r)).empty());
    }
}

TEST_CASE("axiom report: diagonal vs outgoing-label product") {
    const auto g = MomentGraph::build(4);
    const auto fam = KTFamily::build(g);
    const auto report = verify_kt_axioms(g, fam);
    CHECK(report.all_ok());
    REQUIRE(report.entries.size() == 9);
    for (const auto& e : report.entries) {
        CHECK(e.homogeneous);
        CHECK(e.support_ok);
        CHECK(e.scalar != 0);
        if (e.r == 1) {
            CHECK(e.scalar == 1);   // single outgoing edge -a, diagonal -a
            CHECK(e.exact_product);
        }
        if (e.r == 2) {
            CHECK(e.scalar == Rational(1, 3));  // (-a)(-a+d) vs (-3a)(-a+d)
            CHECK(!e.exact_product);
        }
        if (e.r == 0) CHECK(e.scalar == 1);
    }
}

TEST_CASE("axiom degrees across m") {
    for (int m = 1; m <= 10; ++m) {
        const auto g = MomentGraph::build(m);
        const auto report = verify_kt_axioms(g, KTFamily::build(g));
        CHECK(report.all_ok());
    }
}
