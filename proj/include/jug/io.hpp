#pragma once

#include "jug/expansion.hpp"
#include "jug/presentation.hpp"
#include "jug/relations.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace jug {

using json = nlohmann::json;

// ---- BiPoly ----------------------------------------------------------------
// JSON form: list of [i, j, num, den] quadruples sorted ascending by (i, j),
// den > 0, fully reduced. num/den are decimal strings (coefficients are
// arbitrary-precision; JSON numbers would overflow silently).
json poly_json(const BiPoly& p);
BiPoly poly_from_json(const json& j);

// ---- CohClass ---------------------------------------------------------------
// {"m": M, "values": [{"q": Q, "poly": ...}, ...]} sorted by q ascending.
// Canonical output lists every vertex; input may omit zero vertices.
json cohclass_json(const CohClass& f);
CohClass cohclass_from_json(const json& j);

// ---- MomentGraph -------------------------------------------------------------
json graph_json(const MomentGraph& g);
std::string graph_dot(const MomentGraph& g);
std::string graph_text(const MomentGraph& g);

// ---- KT table (rows/columns in the outer-to-inner layout of the reference tables)
std::vector<int> table_row_order(int m);  // basis indices: +m, -m, ..., +1, -1, 0
std::vector<int> table_col_order(int m);  // vertex indices: -m, +m, ..., -1, +1, 0
std::string vertex_name(const MomentGraph& g, int q);   // "(a,b)"
std::string class_name(int m, int r);                   // "xi(a,b)"
std::string kt_table_csv(const KTFamily& fam);
json kt_table_json(const KTFamily& fam);
std::string kt_table_text(const KTFamily& fam);

// ---- Expansions / structure constants ----------------------------------------
json expansion_json(const Expansion& e);
std::string expansion_text(const Expansion& e);
// flat CSV rows "i,j,r,poly" (nonzero coefficients only)
std::string constants_csv(const KTFamily& fam, const StructureTable& table);
std::string constants_csv(int i, int j, const Expansion& e);
json structure_table_json(const StructureTable& table);

// ---- Reports -----------------------------------------------------------------
json violations_json(const std::vector<GkmViolation>& vs);
json axiom_report_json(const KtAxiomReport& report);
json relation_report_json(const RelationReport& report);
json stability_json(const StabilityReport& report);

// ---- Presentation -------------------------------------------------------------
json genpoly_json(const GenPoly& p);

}  // namespace jug
