#include "jug/io.hpp"

#include "jug/errors.hpp"

#include <cstdlib>
#include <sstream>

namespace jug {

json poly_json(const BiPoly& p) {
    json out = json::array();
    for (const auto& [mo, c] : p.terms())
        out.push_back(json::array({mo.ea, mo.ed, num(c).str(), den(c).str()}));
    return out;
}

BiPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw TextParseError("polynomial JSON must be an array of [i,j,num,den]");
    BiPoly p;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 4) throw TextParseError("bad polynomial term " + term.dump());
        const int ea = term[0].get<int>();
        const int ed = term[1].get<int>();
        if (ea < 0 || ed < 0) throw TextParseError("negative exponent in " + term.dump());
        const Rational c = Rational(Int(term[2].get<std::string>()), Int(term[3].get<std::string>()));
        p += BiPoly::monomial(ea, ed, c);
    }
    return p;
}

json cohclass_json(const CohClass& f) {
    json values = json::array();
    for (int q = -f.m(); q <= f.m(); ++q) values.push_back({{"q", q}, {"poly", poly_json(f.at(q))}});
    return {{"m", f.m()}, {"values", values}};
}

CohClass cohclass_from_json(const json& j) {
    const int m = j.at("m").get<int>();
    if (m < 1) throw InvalidM(m);
    CohClass f(m);
    for (const auto& entry : j.at("values")) {
        const int q = entry.at("q").get<int>();
        if (q < -m || q > m) throw UnknownVertex(q, m);
        f.set(q, poly_from_json(entry.at("poly")));
    }
    return f;
}

json graph_json(const MomentGraph& g) {
    json vertices = json::array();
    for (int q = -g.m(); q <= g.m(); ++q) {
        const auto [x, y] = g.pair_of(q);
        vertices.push_back({{"q", q}, {"pair", json::array({x, y})}, {"weight", poly_json(g.weight(q))}});
    }
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({{"source_q", e.source}, {"target_q", e.target}, {"label", poly_json(e.label)}});
    return {{"m", g.m()}, {"vertices", vertices}, {"edges", edges}};
}

std::string vertex_name(const MomentGraph& g, int q) {
    const auto [x, y] = g.pair_of(q);
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

std::string class_name(int m, int r) {
    return "xi(" + std::to_string(m + r) + "," + std::to_string(m - r) + ")";
}

std::string graph_dot(const MomentGraph& g) {
    std::ostringstream out;
    out << "digraph moment_graph_m" << g.m() << " {\n";
    for (int q = -g.m(); q <= g.m(); ++q) out << "  \"" << vertex_name(g, q) << "\";\n";
    for (const Edge& e : g.edges())
        out << "  \"" << vertex_name(g, e.source) << "\" -> \"" << vertex_name(g, e.target)
            << "\" [label=\"" << e.label.text() << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string graph_text(const MomentGraph& g) {
    std::ostringstream out;
    out << "moment graph of X(1,2," << g.m() << "): " << g.vertex_count() << " vertices, "
        << g.edges().size() << " edges\n";
    for (int q = -g.m(); q <= g.m(); ++q)
        out << "  vertex " << vertex_name(g, q) << "  q=" << q << "  weight " << g.weight(q).pretty() << "\n";
    for (const Edge& e : g.edges())
        out << "  edge " << vertex_name(g, e.source) << " -> " << vertex_name(g, e.target) << "  label "
            << e.label.pretty() << "\n";
    return out.str();
}

std::vector<int> table_row_order(int m) {
    std::vector<int> rows;
    for (int k = m; k >= 1; --k) {
        rows.push_back(k);
        rows.push_back(-k);
    }
    rows.push_back(0);
    return rows;
}

std::vector<int> table_col_order(int m) {
    std::vector<int> cols;
    for (int k = m; k >= 1; --k) {
        cols.push_back(-k);
        cols.push_back(k);
    }
    cols.push_back(0);
    return cols;
}

std::string kt_table_csv(const KTFamily& fam) {
    const MomentGraph& g = fam.graph();
    std::ostringstream out;
    out << "class";
    for (const int q : table_col_order(fam.m())) out << ",\"" << vertex_name(g, q) << "\"";
    out << "\n";
    for (const int r : table_row_order(fam.m())) {
        out << "\"" << class_name(fam.m(), r) << "\"";
        for (const int q : table_col_order(fam.m())) out << "," << fam.p_value(r, q).text();
        out << "\n";
    }
    return out.str();
}

json kt_table_json(const KTFamily& fam) {
    json rows = json::array();
    for (const int r : table_row_order(fam.m())) {
        json cells = json::array();
        for (const int q : table_col_order(fam.m()))
            cells.push_back({{"q", q}, {"poly", poly_json(fam.p_value(r, q))}});
        rows.push_back({{"r", r}, {"class", class_name(fam.m(), r)}, {"cells", cells}});
    }
    json cols = json::array();
    for (const int q : table_col_order(fam.m())) cols.push_back({{"q", q}, {"vertex", vertex_name(fam.graph(), q)}});
    return {{"m", fam.m()}, {"columns", cols}, {"rows", rows}};
}

std::string kt_table_text(const KTFamily& fam) {
    const MomentGraph& g = fam.graph();
    std::ostringstream out;
    for (const int r : table_row_order(fam.m())) {
        out << class_name(fam.m(), r) << ":\n";
        for (const int q : table_col_order(fam.m()))
            out << "  " << vertex_name(g, q) << "  " << fam.p_value(r, q).pretty() << "\n";
    }
    return out.str();
}

json expansion_json(const Expansion& e) {
    json coeffs = json::array();
    for (int r = -e.m(); r <= e.m(); ++r) coeffs.push_back({{"r", r}, {"poly", poly_json(e.coeff(r))}});
    return {{"m", e.m()}, {"coeffs", coeffs}, {"integral", e.integral()}};
}

std::string expansion_text(const Expansion& e) {
    std::ostringstream out;
    const auto support = e.support();
    if (support.empty()) {
        out << "0\n";
        return out.str();
    }
    for (const int r : support)
        out << class_name(e.m(), r) << " : " << e.coeff(r).pretty() << "\n";
    return out.str();
}

std::string constants_csv(int i, int j, const Expansion& e) {
    std::ostringstream out;
    for (const int r : e.support())
        out << i << "," << j << "," << r << "," << e.coeff(r).text() << "\n";
    return out.str();
}

std::string constants_csv(const KTFamily& fam, const StructureTable& table) {
    std::ostringstream out;
    out << "i,j,r,poly\n";
    for (int i = -fam.m(); i <= fam.m(); ++i)
        for (int j = -fam.m(); j <= fam.m(); ++j) out << constants_csv(i, j, table.entry(i, j));
    return out.str();
}

json structure_table_json(const StructureTable& table) {
    json entries = json::array();
    for (int i = -table.m(); i <= table.m(); ++i)
        for (int j = -table.m(); j <= table.m(); ++j)
            entries.push_back({{"i", i}, {"j", j}, {"expansion", expansion_json(table.entry(i, j))}});
    return {{"m", table.m()}, {"entries", entries}};
}

json violations_json(const std::vector<GkmViolation>& vs) {
    json out = json::array();
    for (const auto& v : vs)
        out.push_back({{"source_q", v.edge.source},
                       {"target_q", v.edge.target},
                       {"label", poly_json(v.edge.label)},
                       {"difference", poly_json(v.difference)}});
    return out;
}

json axiom_report_json(const KtAxiomReport& report) {
    json entries = json::array();
    for (const auto& e : report.entries)
        entries.push_back({{"r", e.r},
                           {"homogeneous", e.homogeneous},
                           {"support_ok", e.support_ok},
                           {"diagonal_nonzero", e.diagonal_nonzero},
                           {"scalar", rational_text(e.scalar)},
                           {"exact_product", e.exact_product}});
    return {{"all_ok", report.all_ok()}, {"entries", entries}};
}

json relation_report_json(const RelationReport& report) {
    json results = json::array();
    for (const auto& r : report.results) {
        json entry{{"relation", relation_name(r.id.tag)}, {"pass", r.pass}};
        if (r.id.q) entry["q"] = *r.id.q;
        if (r.counterexample)
            entry["counterexample"] = {{"part", r.counterexample->part},
                                       {"vertex_q", r.counterexample->vertex},
                                       {"lhs", poly_json(r.counterexample->lhs)},
                                       {"rhs", poly_json(r.counterexample->rhs)}};
        results.push_back(std::move(entry));
    }
    return {{"all_pass", report.all_pass()}, {"results", results}};
}

json stability_json(const StabilityReport& report) {
    json mismatches = json::array();
    for (const auto& mis : report.mismatches)
        mismatches.push_back({{"kind", mis.kind},
                              {"q", mis.q},
                              {"i", mis.i},
                              {"j", mis.j},
                              {"r", mis.r},
                              {"at_m1", poly_json(mis.at_m1)},
                              {"at_m2", poly_json(mis.at_m2)}});
    return {{"m1", report.m1},
            {"m2", report.m2},
            {"constants_checked", report.constants_checked},
            {"products_checked", report.products_checked},
            {"pass", report.pass()},
            {"mismatches", mismatches}};
}

json genpoly_json(const GenPoly& p) {
    json terms = json::array();
    for (const auto& [k, c] : p.terms())
        terms.push_back({{"dp", k.first}, {"dm", k.second}, {"poly", poly_json(c)}});
    return {{"text", p.text()}, {"terms", terms}};
}

}  // namespace jug
