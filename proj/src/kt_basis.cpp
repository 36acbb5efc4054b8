#include "jug/kt_basis.hpp"

#include "jug/errors.hpp"

#include <stdexcept>
#include <cstdlib>

namespace jug {

namespace {

// ceil(x/2) for x >= 0; the closed-form index ranges keep every ceiling
// argument non-negative, and that is enforced rather than assumed
int ceil_half(int x) {
    if (x < 0) throw std::logic_error("negative ceiling argument in a basis-class formula");
    return (x + 1) / 2;
}

// scal * prod_{k=lo}^{hi} (sign*a + k*d)
BiPoly linear_product(const Rational& scal, int sign, int lo, int hi) {
    BiPoly p(scal);
    for (int k = lo; k <= hi; ++k) p *= BiPoly::linear(sign, k);
    return p;
}

}  // namespace

CohClass build_xi(const MomentGraph& g, int r) {
    const int m = g.m();
    if (r < -m || r > m) throw IndexOutOfRange(r, m);
    CohClass f(m);
    if (r == 0) {
        for (int q = -m; q <= m; ++q) f.set(q, BiPoly(1));
        return f;
    }
    const int q = std::abs(r);
    if (r > 0) {
        // xi(m+q, m-q): vertex (m+p, m-p) has signed index -p
        for (int p = q; p <= m; ++p) {
            const int c = ceil_half(p - q + 1);
            f.set(-p, linear_product(Rational(binomial(c + q - 1, q)), -1, c - 1, c + q - 2));
        }
        for (int p = q + 1; p <= m; ++p) {
            const int c = ceil_half(p - q);
            f.set(p, linear_product(Rational(binomial(c + q - 1, q)), +1, c + 1, c + q));
        }
    } else {
        // xi(m-q, m+q)
        for (int p = q + 1; p <= m; ++p) {
            const int c = ceil_half(p - q);
            f.set(-p, linear_product(Rational(binomial(c + q - 1, q)), -1, c, c + q - 1));
        }
        for (int p = q; p <= m; ++p) {
            const int c = ceil_half(p - q + 1);
            f.set(p, linear_product(Rational(binomial(c + q - 1, q)), +1, c, c + q - 1));
        }
    }
    return f;
}

KTFamily KTFamily::build(const MomentGraph& g) {
    std::vector<CohClass> classes;
    classes.reserve(static_cast<std::size_t>(2 * g.m() + 1));
    for (int r = -g.m(); r <= g.m(); ++r) classes.push_back(build_xi(g, r));
    return KTFamily(g, std::move(classes));
}

KTFamily::KTFamily(MomentGraph g, std::vector<CohClass> classes)
    : graph_(std::move(g)), classes_(std::move(classes)) {
    if (classes_.size() != static_cast<std::size_t>(2 * m() + 1))
        throw DimensionMismatch(m(), static_cast<int>(classes_.size() - 1) / 2);
}

const CohClass& KTFamily::cls(int r) const {
    if (r < -m() || r > m()) throw IndexOutOfRange(r, m());
    return classes_[static_cast<std::size_t>(r + m())];
}

const BiPoly& KTFamily::p_value(int r, int q) const {
    graph_.require_vertex(q);
    return cls(r).at(q);
}

bool KtAxiomReport::all_ok() const {
    for (const auto& e : entries)
        if (!(e.homogeneous && e.support_ok && e.diagonal_nonzero && e.scalar != 0)) return false;
    return true;
}

KtAxiomReport verify_kt_axioms(const MomentGraph& g, const KTFamily& fam) {
    KtAxiomReport report;
    const int m = g.m();
    for (int r = -m; r <= m; ++r) {
        KtAxiomEntry entry;
        entry.r = r;
        const CohClass& xi = fam.cls(r);
        const int own = KTFamily::vertex_of(r);

        entry.homogeneous = true;
        entry.support_ok = true;
        for (int q = -m; q <= m; ++q) {
            if (!xi.at(q).is_homogeneous_of_degree(std::abs(r))) entry.homogeneous = false;
            if (!g.reachable(q, own) && !xi.at(q).is_zero()) entry.support_ok = false;
        }

        BiPoly out_product(1);
        for (const Edge& e : g.outgoing(own)) out_product *= e.label;
        const BiPoly& diag = xi.at(own);
        entry.diagonal_nonzero = !diag.is_zero();
        // both are products of |r| linear forms; the ratio, when the division
        // is exact and constant, is the Remark-3.4 scalar
        if (auto quo = BiPoly::try_div(diag, out_product); quo && quo->total_degree() <= 0) {
            entry.scalar = quo->coeff(0, 0);
            entry.exact_product = entry.scalar == 1;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace jug
