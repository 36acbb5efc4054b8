#include "jug/relations.hpp"

#include "jug/errors.hpp"
#include "jug/parallel.hpp"

#include <cstdlib>

namespace jug {

const char* relation_name(Relation tag) {
    switch (tag) {
        case Relation::P3_5: return "P3_5";
        case Relation::P3_6: return "P3_6";
        case Relation::P3_8: return "P3_8";
        case Relation::C3_9: return "C3_9";
        case Relation::P3_10: return "P3_10";
        case Relation::P3_11: return "P3_11";
        case Relation::P3_12: return "P3_12";
        case Relation::T4_2: return "T4_2";
        case Relation::P4_4: return "P4_4";
        case Relation::P4_5: return "P4_5";
    }
    return "?";
}

std::optional<Relation> relation_from_name(const std::string& name) {
    for (Relation tag : {Relation::P3_5, Relation::P3_6, Relation::P3_8, Relation::C3_9, Relation::P3_10,
                         Relation::P3_11, Relation::P3_12, Relation::T4_2, Relation::P4_4, Relation::P4_5})
        if (name == relation_name(tag)) return tag;
    return std::nullopt;
}

namespace {

// Builder state shared by the per-relation lambdas.
struct Ctx {
    const KTFamily& fam;

    const CohClass& xi(int r) const { return fam.cls(r); }
    // p^{vertex}_{class} as a constant class, per the Def-3.3 convention
    CohClass pconst(int r, int vertex) const { return const_class(fam.graph(), fam.p_value(r, vertex)); }
    CohClass zero() const { return CohClass(fam.m()); }

    // base * prod_{r=1}^{count} (base - c_r) with c_r the restriction of the
    // degree-2 generator `b` at the vertex of sign -b (r odd) / +b (r even);
    // the factor pattern shared by the power formulas and the ideal generators.
    CohClass generator_product(int b, int count) const {
        CohClass acc = xi(b);
        for (int r = 1; r <= count; ++r) {
            const int vertex = (r % 2 == 1) ? -b * r : b * r;
            acc = acc * (xi(b) - pconst(b, vertex));
        }
        return acc;
    }
};

std::optional<Counterexample> first_diff(const std::string& part, const CohClass& lhs, const CohClass& rhs) {
    const int m = lhs.m();
    for (int q = -m; q <= m; ++q)
        if (!(lhs.at(q) == rhs.at(q))) return Counterexample{part, q, lhs.at(q), rhs.at(q)};
    return std::nullopt;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw BadParameters(what);
}

}  // namespace

CheckResult check(const KTFamily& fam, const RelationId& rel) {
    const int m = fam.m();
    const Ctx c{fam};
    std::vector<std::pair<std::string, std::pair<CohClass, CohClass>>> eqs;
    const auto push = [&](std::string part, CohClass lhs, CohClass rhs) {
        eqs.emplace_back(std::move(part), std::make_pair(std::move(lhs), std::move(rhs)));
    };
    const int q = rel.q.value_or(0);

    switch (rel.tag) {
        case Relation::P3_5:
            require(!rel.q && m >= 2, "P3_5 has no parameter and needs m >= 2");
            push("product", c.xi(1) * c.xi(-1), c.xi(2) + c.xi(-2));
            break;
        case Relation::P3_6: {
            require(rel.q && 0 <= q && q <= m, "P3_6 needs 0 <= q <= m");
            for (const int ext : {m, -m}) {  // xi(2m,0) then xi(0,2m)
                const int vx = KTFamily::vertex_of(ext);
                const std::string side = ext > 0 ? "top" : "bottom";
                push(side + "_plus", c.xi(ext) * (c.xi(q) - c.pconst(q, vx)), c.zero());
                push(side + "_minus", c.xi(ext) * (c.xi(-q) - c.pconst(-q, vx)), c.zero());
            }
            break;
        }
        case Relation::P3_8:
            require(rel.q && q % 2 == 1 && 0 < q && q < m, "P3_8 needs odd q with 0 < q < m");
            push("plus", c.xi(q) * (c.xi(1) - c.pconst(1, -q)), c.xi(-(q + 1)).scaled(Rational(q + 1)));
            push("minus", c.xi(-q) * (c.xi(-1) - c.pconst(-1, q)), c.xi(q + 1).scaled(Rational(q + 1)));
            break;
        case Relation::C3_9:
            require(!rel.q && m >= 2, "C3_9 has no parameter and needs m >= 2");
            push("plus", c.xi(2).scaled(Rational(2)), c.xi(-1) * (c.xi(-1) - c.pconst(-1, 1)));
            push("minus", c.xi(-2).scaled(Rational(2)), c.xi(1) * (c.xi(1) - c.pconst(1, -1)));
            break;
        case Relation::P3_10:
            require(rel.q && q % 2 == 0 && 0 < q && q < m, "P3_10 needs even q with 0 < q < m");
            push("plus", c.xi(q) * (c.xi(-1) - c.pconst(-1, -q)), c.xi(-(q + 1)).scaled(Rational(q + 1)));
            push("minus", c.xi(-q) * (c.xi(1) - c.pconst(1, q)), c.xi(q + 1).scaled(Rational(q + 1)));
            break;
        case Relation::P3_11:
            require(rel.q && q % 2 == 0 && 0 < q && q < m, "P3_11 needs even q with 0 < q < m");
            push("plus", c.xi(q) * (c.xi(1) - c.pconst(1, -q)),
                 c.xi(q + 1) + c.xi(-(q + 1)).scaled(Rational(q)));
            push("minus", c.xi(-q) * (c.xi(-1) - c.pconst(-1, q)),
                 c.xi(q + 1).scaled(Rational(q)) + c.xi(-(q + 1)));
            break;
        case Relation::P3_12:
            require(rel.q && q % 2 == 1 && 0 < q && q < m, "P3_12 needs odd q with 0 < q < m");
            push("plus", c.xi(q) * (c.xi(-1) - c.pconst(-1, -q)),
                 c.xi(q + 1) + c.xi(-(q + 1)).scaled(Rational(q)));
            push("minus", c.xi(-q) * (c.xi(1) - c.pconst(1, q)),
                 c.xi(q + 1).scaled(Rational(q)) + c.xi(-(q + 1)));
            break;
        case Relation::T4_2:
            require(rel.q && 1 <= q && q <= m, "T4_2 needs 1 <= q <= m");
            for (const int side : {+1, -1}) {
                const int b = ((q % 2 == 1) == (side == +1)) ? 1 : -1;
                push(side > 0 ? "plus" : "minus", c.xi(side * q).scaled(Rational(factorial(q))),
                     c.generator_product(b, q - 1));
            }
            break;
        case Relation::P4_4:
            require(!rel.q, "P4_4 has no parameter");
            push("relation", (c.xi(1) * c.xi(-1)).scaled(Rational(2)),
                 c.xi(1) * (c.xi(1) - c.pconst(1, -1)) + c.xi(-1) * (c.xi(-1) - c.pconst(-1, 1)));
            break;
        case Relation::P4_5:
            require(!rel.q, "P4_5 has no parameter");
            push("plus", c.generator_product(1, m), c.zero());
            push("minus", c.generator_product(-1, m), c.zero());
            break;
    }

    CheckResult result{rel, true, std::nullopt};
    for (const auto& [part, sides] : eqs) {
        if (auto cex = first_diff(part, sides.first, sides.second)) {
            result.pass = false;
            result.counterexample = std::move(cex);
            break;
        }
    }
    return result;
}

std::vector<RelationId> admissible_instances(int m) {
    std::vector<RelationId> ids;
    if (m >= 2) ids.push_back({Relation::P3_5, std::nullopt});
    for (int q = 0; q <= m; ++q) ids.push_back({Relation::P3_6, q});
    for (int q = 1; q < m; q += 2) ids.push_back({Relation::P3_8, q});
    if (m >= 2) ids.push_back({Relation::C3_9, std::nullopt});
    for (int q = 2; q < m; q += 2) ids.push_back({Relation::P3_10, q});
    for (int q = 2; q < m; q += 2) ids.push_back({Relation::P3_11, q});
    for (int q = 1; q < m; q += 2) ids.push_back({Relation::P3_12, q});
    for (int q = 1; q <= m; ++q) ids.push_back({Relation::T4_2, q});
    ids.push_back({Relation::P4_4, std::nullopt});
    ids.push_back({Relation::P4_5, std::nullopt});
    return ids;
}

bool RelationReport::all_pass() const {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

RelationReport check_all(const KTFamily& fam, int jobs) {
    const auto ids = admissible_instances(fam.m());
    RelationReport report;
    report.results.resize(ids.size());
    parallel_for(ids.size(), jobs, [&](std::size_t i) { report.results[i] = check(fam, ids[i]); });
    return report;
}

}  // namespace jug
