#include "jug/expansion.hpp"

#include "jug/errors.hpp"
#include "jug/parallel.hpp"

#include <cstdlib>
#include <utility>

namespace jug {

const BiPoly& Expansion::coeff(int r) const {
    if (r < -m_ || r > m_) throw IndexOutOfRange(r, m_);
    return coeffs_[static_cast<std::size_t>(r + m_)];
}

void Expansion::set(int r, BiPoly c) {
    if (r < -m_ || r > m_) throw IndexOutOfRange(r, m_);
    coeffs_[static_cast<std::size_t>(r + m_)] = std::move(c);
}

std::vector<int> Expansion::support() const {
    std::vector<int> out;
    for (int r = -m_; r <= m_; ++r)
        if (!coeff(r).is_zero()) out.push_back(r);
    return out;
}

bool Expansion::integral() const {
    for (const auto& c : coeffs_)
        if (!c.has_integer_coefficients()) return false;
    return true;
}

CohClass Expansion::recombine(const KTFamily& fam) const {
    if (fam.m() != m_) throw DimensionMismatch(fam.m(), m_);
    CohClass out(m_);
    for (int r = -m_; r <= m_; ++r)
        if (!coeff(r).is_zero()) out = out + fam.cls(r).scaled(coeff(r));
    return out;
}

Expansion expand(const KTFamily& fam, const CohClass& f, bool check_gkm_first) {
    const int m = fam.m();
    if (f.m() != m) throw DimensionMismatch(m, f.m());
    if (check_gkm_first) {
        if (const auto violations = verify_gkm(fam.graph(), f); !violations.empty())
            throw NotInSpan("input violates " + std::to_string(violations.size()) + " GKM congruence(s)", 0, 0);
    }

    Expansion h(m);
    CohClass residual = f;

    h.set(0, residual.at(0));
    residual = residual - const_class(fam.graph(), h.coeff(0));

    for (int q = 1; q <= m; ++q) {
        for (const int side : {+1, -1}) {
            const int r = side * q;
            const int vertex = KTFamily::vertex_of(r);
            const BiPoly& value = residual.at(vertex);
            if (value.is_zero()) continue;
            auto quo = BiPoly::try_div(value, fam.diagonal(r));
            if (!quo)
                throw NotInSpan("residual at vertex (" + std::to_string(m - vertex) + "," +
                                    std::to_string(m + vertex) + ") is not divisible by the diagonal value at step q=" +
                                    std::to_string(q) + (side > 0 ? " (plus side)" : " (minus side)"),
                                q, side);
            h.set(r, std::move(*quo));
            residual = residual - fam.cls(r).scaled(h.coeff(r));
        }
    }
    // every vertex was cleared by some step above; a nonzero residual would
    // mean the recursion's support bookkeeping is broken
    if (!residual.is_zero()) throw NotInSpan("nonzero residual after the full sweep", m, 0);
    return h;
}

namespace {

// Element of Frac(Q[a,d]) as a numerator/denominator pair. Normalisation
// collapses to a polynomial whenever the division happens to be exact (we
// deliberately have no multivariate gcd; exact division is all the Lemma-5.1
// data ever needs).
struct Frac {
    BiPoly n, d;

    static Frac of(BiPoly p) { return {std::move(p), BiPoly(1)}; }

    void normalize() {
        if (n.is_zero()) {
            d = BiPoly(1);
            return;
        }
        if (auto q = BiPoly::try_div(n, d)) {
            n = std::move(*q);
            d = BiPoly(1);
        }
    }

    Frac operator+(const Frac& o) const {
        Frac r{n * o.d + o.n * d, d * o.d};
        r.normalize();
        return r;
    }
    Frac operator-(const Frac& o) const {
        Frac r{n * o.d - o.n * d, d * o.d};
        r.normalize();
        return r;
    }
    Frac operator*(const Frac& o) const {
        Frac r{n * o.n, d * o.d};
        r.normalize();
        return r;
    }
    Frac divided_by(const BiPoly& p) const {
        if (p.is_zero()) throw DivisorZero();
        Frac r{n, d * p};
        r.normalize();
        return r;
    }
};

}  // namespace

Expansion oracle_expand(const KTFamily& fam, const CohClass& f) {
    const int m = fam.m();
    if (f.m() != m) throw DimensionMismatch(m, f.m());

    // back-substitution order 0, +1, -1, +2, -2, ...; at the own vertex of
    // index r only classes with |s| < |r| (plus r itself) restrict nonzero
    std::vector<Frac> c(static_cast<std::size_t>(2 * m + 1), Frac::of(BiPoly(0)));
    const auto slot = [&](int r) -> Frac& { return c[static_cast<std::size_t>(r + m)]; };

    slot(0) = Frac::of(f.at(0));
    for (int q = 1; q <= m; ++q) {
        for (const int side : {+1, -1}) {
            const int r = side * q;
            const int vertex = KTFamily::vertex_of(r);
            Frac rhs = Frac::of(f.at(vertex));
            rhs = rhs - slot(0) * Frac::of(fam.cls(0).at(vertex));
            for (int s = 1; s < q; ++s) {
                rhs = rhs - slot(s) * Frac::of(fam.cls(s).at(vertex));
                rhs = rhs - slot(-s) * Frac::of(fam.cls(-s).at(vertex));
            }
            slot(r) = rhs.divided_by(fam.diagonal(r));
        }
    }

    Expansion h(m);
    for (int r = -m; r <= m; ++r) {
        Frac& fr = slot(r);
        fr.normalize();
        auto quo = BiPoly::try_div(fr.n, fr.d);
        if (!quo)
            throw NotInSpan("triangular solve produced a non-polynomial coefficient at index " + std::to_string(r),
                            std::abs(r), r == 0 ? 0 : (r > 0 ? +1 : -1));
        h.set(r, std::move(*quo));
    }
    return h;
}

Expansion structure_constants(const KTFamily& fam, int i, int j) {
    return expand(fam, fam.cls(i) * fam.cls(j));
}

const Expansion& StructureTable::entry(int i, int j) const {
    if (i < -m_ || i > m_) throw IndexOutOfRange(i, m_);
    if (j < -m_ || j > m_) throw IndexOutOfRange(j, m_);
    return entries_[static_cast<std::size_t>((i + m_) * (2 * m_ + 1) + (j + m_))];
}

Expansion& StructureTable::slot(int i, int j) {
    return const_cast<Expansion&>(static_cast<const StructureTable&>(*this).entry(i, j));
}

StructureTable full_table(const KTFamily& fam, int jobs) {
    const int m = fam.m();
    const int n = 2 * m + 1;
    StructureTable table(m);
    parallel_for(static_cast<std::size_t>(n) * n, jobs, [&](std::size_t k) {
        const int i = static_cast<int>(k) / n - m;
        const int j = static_cast<int>(k) % n - m;
        if (i > j) return;  // fill the upper triangle, mirror below
        table.slot(i, j) = structure_constants(fam, i, j);
    });
    for (int i = -m; i <= m; ++i) {
        for (int j = -m; j <= m; ++j) {
            if (i > j) table.slot(i, j) = table.entry(j, i);
            if (!table.entry(i, j).integral())
                throw IntegralityViolation("non-integral structure constants at (i,j)=(" + std::to_string(i) +
                                           "," + std::to_string(j) + ")");
        }
    }
    return table;
}

}  // namespace jug
