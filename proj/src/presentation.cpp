#include "jug/presentation.hpp"

#include "jug/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace jug {

GenPoly GenPoly::constant(BiPoly c) {
    GenPoly p;
    if (!c.is_zero()) p.terms_.emplace(Key{0, 0}, std::move(c));
    return p;
}

GenPoly GenPoly::variable(int dp, int dm) {
    GenPoly p;
    p.terms_.emplace(Key{dp, dm}, BiPoly(1));
    return p;
}

int GenPoly::degree_plus() const {
    int dg = -1;
    for (const auto& [k, c] : terms_) dg = std::max(dg, k.first);
    return dg;
}

int GenPoly::degree_minus() const {
    int dg = -1;
    for (const auto& [k, c] : terms_) dg = std::max(dg, k.second);
    return dg;
}

void GenPoly::add_term(const Key& k, const BiPoly& c) {
    if (c.is_zero()) return;
    const auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GenPoly operator+(const GenPoly& l, const GenPoly& r) {
    GenPoly out = l;
    for (const auto& [k, c] : r.terms_) out.add_term(k, c);
    return out;
}

GenPoly operator-(const GenPoly& l, const GenPoly& r) {
    GenPoly out = l;
    for (const auto& [k, c] : r.terms_) out.add_term(k, -c);
    return out;
}

GenPoly operator*(const GenPoly& l, const GenPoly& r) {
    GenPoly out;
    for (const auto& [kl, cl] : l.terms_)
        for (const auto& [kr, cr] : r.terms_)
            out.add_term({kl.first + kr.first, kl.second + kr.second}, cl * cr);
    return out;
}

GenPoly GenPoly::scaled(const Rational& c) const {
    GenPoly out;
    if (c == 0) return out;
    for (const auto& [k, co] : terms_) out.terms_.emplace(k, co.scaled(c));
    return out;
}

std::string GenPoly::text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += '+';
        out += "(" + c.text() + ")*xp^" + std::to_string(k.first) + "*xm^" + std::to_string(k.second);
    }
    return out;
}

namespace {

// The shared power/ideal factor pattern, as a formal polynomial: for the
// generator of sign b, factor r subtracts the restriction of that generator
// at the vertex of sign -b (odd r) / +b (even r).
GenPoly generator_product(const KTFamily& fam, int b, int count) {
    const GenPoly x = b > 0 ? GenPoly::xplus() : GenPoly::xminus();
    GenPoly acc = x;
    for (int r = 1; r <= count; ++r) {
        const int vertex = (r % 2 == 1) ? -b * r : b * r;
        acc = acc * (x - GenPoly::constant(fam.p_value(b, vertex)));
    }
    return acc;
}

}  // namespace

IdealGens build_ideal(const KTFamily& fam) {
    const GenPoly xp = GenPoly::xplus();
    const GenPoly xm = GenPoly::xminus();
    const GenPoly p1 = GenPoly::constant(fam.diagonal(1));
    const GenPoly p2 = GenPoly::constant(fam.diagonal(-1));
    IdealGens gens;
    gens.g1 = (xp * xm).scaled(2) - xp * (xp - p1) - xm * (xm - p2);
    gens.g2 = generator_product(fam, +1, fam.m());
    gens.g3 = generator_product(fam, -1, fam.m());
    return gens;
}

CohClass apply_phi(const KTFamily& fam, const GenPoly& P) {
    const int m = fam.m();
    const int dp = std::max(P.degree_plus(), 0);
    const int dm = std::max(P.degree_minus(), 0);
    // power tables for the two degree-2 classes
    std::vector<CohClass> xp_pow{const_class(fam.graph(), BiPoly(1))};
    std::vector<CohClass> xm_pow{xp_pow[0]};
    for (int i = 1; i <= dp; ++i) xp_pow.push_back(xp_pow.back() * fam.cls(1));
    for (int j = 1; j <= dm; ++j) xm_pow.push_back(xm_pow.back() * fam.cls(-1));

    CohClass out(m);
    for (const auto& [k, c] : P.terms())
        out = out + (xp_pow[static_cast<std::size_t>(k.first)] * xm_pow[static_cast<std::size_t>(k.second)]).scaled(c);
    return out;
}

GenPoly surjectivity_witness(const KTFamily& fam, int r) {
    const int m = fam.m();
    if (r < -m || r > m) throw IndexOutOfRange(r, m);
    if (r == 0) return GenPoly::constant(BiPoly(1));
    const int q = std::abs(r);
    const int b = ((q % 2 == 1) == (r > 0)) ? 1 : -1;
    return generator_product(fam, b, q - 1).scaled(Rational(Int(1), factorial(q)));
}

int MonomialMatrix::diagonal_index(int power, bool plus_generator) {
    const int side = (power % 2 == 1) == plus_generator ? 1 : -1;
    return side * power;
}

MonomialMatrix monomial_matrix(const KTFamily& fam) {
    const int m = fam.m();
    MonomialMatrix mm;
    mm.m = m;
    mm.one = expand(fam, const_class(fam.graph(), BiPoly(1)));

    for (const bool plus : {true, false}) {
        auto& dst = plus ? mm.plus_pow : mm.minus_pow;
        const CohClass& gen = fam.cls(plus ? 1 : -1);
        CohClass power = const_class(fam.graph(), BiPoly(1));
        for (int i = 1; i <= m; ++i) {
            power = power * gen;
            Expansion e = expand(fam, power);
            const int diag = MonomialMatrix::diagonal_index(i, plus);
            const char* gname = plus ? "xp" : "xm";
            if (!(e.coeff(diag) == BiPoly(Rational(factorial(i)))))
                throw RankDefect(std::string(gname) + "^" + std::to_string(i) + ": coefficient at index " +
                                 std::to_string(diag) + " is not " + std::to_string(i) + "!");
            if (!e.coeff(-diag).is_zero())
                throw RankDefect(std::string(gname) + "^" + std::to_string(i) +
                                 ": nonzero coefficient at the mirror index " + std::to_string(-diag));
            for (int s = i + 1; s <= m; ++s)
                if (!e.coeff(s).is_zero() || !e.coeff(-s).is_zero())
                    throw RankDefect(std::string(gname) + "^" + std::to_string(i) +
                                     ": block triangularity fails at |index| " + std::to_string(s));
            dst.push_back(std::move(e));
        }
    }
    return mm;
}

StabilityReport stability_check(int m1, int m2) {
    if (m1 < 1 || m1 >= m2) throw BadParameters("stability check needs 1 <= m1 < m2");
    StabilityReport report;
    report.m1 = m1;
    report.m2 = m2;

    const KTFamily fam1 = KTFamily::build(MomentGraph::build(m1));
    const KTFamily fam2 = KTFamily::build(MomentGraph::build(m2));

    // (a) presentation constants: restrictions of the degree-2 generators at
    // the magnitude-q vertices agree across truncations, q <= m1
    for (int q = 1; q <= m1; ++q) {
        for (const int b : {+1, -1}) {
            for (const int vsign : {-1, +1}) {  // vertex (m+q,m-q) has sign -1
                const BiPoly& v1 = fam1.p_value(b, vsign * q);
                const BiPoly& v2 = fam2.p_value(b, vsign * q);
                ++report.constants_checked;
                if (!(v1 == v2)) {
                    StabilityMismatch mis;
                    mis.kind = "constant";
                    mis.q = q;
                    mis.i = b;
                    mis.j = vsign;
                    mis.at_m1 = v1;
                    mis.at_m2 = v2;
                    report.mismatches.push_back(std::move(mis));
                }
            }
        }
    }

    // (b) overlapping structure constants: every (i,j) with |i|+|j| <= m1,
    // identified across truncations by sign and magnitude
    for (int i = -m1; i <= m1; ++i) {
        for (int j = -m1; j <= m1; ++j) {
            if (std::abs(i) + std::abs(j) > m1) continue;
            const Expansion e1 = structure_constants(fam1, i, j);
            const Expansion e2 = structure_constants(fam2, i, j);
            ++report.products_checked;
            for (int r = -m1; r <= m1; ++r) {
                if (!(e1.coeff(r) == e2.coeff(r))) {
                    StabilityMismatch mis;
                    mis.kind = "product";
                    mis.i = i;
                    mis.j = j;
                    mis.r = r;
                    mis.at_m1 = e1.coeff(r);
                    mis.at_m2 = e2.coeff(r);
                    report.mismatches.push_back(std::move(mis));
                }
            }
            // coefficients beyond the small truncation must vanish upstairs
            for (int r = m1 + 1; r <= m2; ++r) {
                for (const int s : {+1, -1}) {
                    if (!e2.coeff(s * r).is_zero()) {
                        StabilityMismatch mis;
                        mis.kind = "product";
                        mis.i = i;
                        mis.j = j;
                        mis.r = s * r;
                        mis.at_m2 = e2.coeff(s * r);
                        report.mismatches.push_back(std::move(mis));
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace jug
