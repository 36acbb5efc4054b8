#include "jug/io.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

namespace py = pybind11;
using namespace jug;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
            return out;
        }
        default:
            return py::none();
    }
}

std::map<int, BiPoly> expansion_dict(const Expansion& e) {
    std::map<int, BiPoly> out;
    for (const int r : e.support()) out.emplace(r, e.coeff(r));
    return out;
}

}  // namespace

PYBIND11_MODULE(_jugcoh, mod) {
    mod.doc() = "exact equivariant cohomology of the rank-one juggling varieties";
    mod.attr("__version__") = "0.1.0";

    py::register_exception<Error>(mod, "JugError");

    py::class_<BiPoly>(mod, "BiPoly")
        .def(py::init(&BiPoly::parse), py::arg("text"), "parse the canonical text form")
        .def(py::init<int>())
        .def_static("alpha", &BiPoly::alpha)
        .def_static("delta", &BiPoly::delta)
        .def("text", &BiPoly::text, "canonical interchange form")
        .def("is_zero", &BiPoly::is_zero)
        .def("is_integral", &BiPoly::has_integer_coefficients)
        .def("degree", &BiPoly::total_degree)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__str__", &BiPoly::pretty)
        .def("__repr__", [](const BiPoly& p) { return "BiPoly('" + p.text() + "')"; });

    py::class_<MomentGraph>(mod, "MomentGraph")
        .def(py::init(&MomentGraph::build), py::arg("m"))
        .def_property_readonly("m", &MomentGraph::m)
        .def_property_readonly("vertex_count", &MomentGraph::vertex_count)
        .def_property_readonly("edge_count", [](const MomentGraph& g) { return g.edges().size(); })
        .def("pair", &MomentGraph::pair_of, py::arg("q"))
        .def("weight", &MomentGraph::weight, py::arg("q"))
        .def("reachable", &MomentGraph::reachable, py::arg("source"), py::arg("target"))
        .def("outgoing",
             [](const MomentGraph& g, int q) {
                 std::vector<std::pair<int, BiPoly>> out;
                 for (const Edge& e : g.outgoing(q)) out.emplace_back(e.target, e.label);
                 return out;
             })
        .def_static("edge_label", &MomentGraph::edge_label, py::arg("p"), py::arg("l"))
        .def("dot", &graph_dot)
        .def("to_json", [](const MomentGraph& g) { return json_to_py(graph_json(g)); });

    py::class_<CohClass>(mod, "CohClass")
        .def_property_readonly("m", &CohClass::m)
        .def("at", &CohClass::at, py::arg("q"))
        .def("is_zero", &CohClass::is_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("scaled", py::overload_cast<const BiPoly&>(&CohClass::scaled, py::const_));

    py::class_<KTFamily>(mod, "KTFamily")
        .def(py::init([](int m) { return KTFamily::build(MomentGraph::build(m)); }), py::arg("m"))
        .def_property_readonly("m", &KTFamily::m)
        .def_property_readonly("graph", &KTFamily::graph)
        .def("cls", &KTFamily::cls, py::arg("r"))
        .def("value", &KTFamily::p_value, py::arg("r"), py::arg("q"),
             "restriction of the index-r class at the vertex with signed index q")
        .def("diagonal", &KTFamily::diagonal, py::arg("r"))
        .def("table_csv", &kt_table_csv)
        .def("table", [](const KTFamily& fam) { return json_to_py(kt_table_json(fam)); });

    mod.def(
        "const_class", [](const KTFamily& fam, const BiPoly& tau) { return const_class(fam.graph(), tau); },
        py::arg("family"), py::arg("tau"));
    mod.def(
        "gkm_violations",
        [](const KTFamily& fam, const CohClass& f) {
            return json_to_py(violations_json(verify_gkm(fam.graph(), f)));
        },
        py::arg("family"), py::arg("cls"));
    mod.def(
        "verify_kt_axioms",
        [](const KTFamily& fam) { return json_to_py(axiom_report_json(verify_kt_axioms(fam.graph(), fam))); },
        py::arg("family"));
    mod.def(
        "check_relations", [](const KTFamily& fam) { return json_to_py(relation_report_json(check_all(fam))); },
        py::arg("family"));
    mod.def(
        "expand",
        [](const KTFamily& fam, const CohClass& f, bool check_gkm) {
            return expansion_dict(expand(fam, f, check_gkm));
        },
        py::arg("family"), py::arg("cls"), py::arg("check_gkm") = false,
        "coefficients of a class in the KT basis, nonzero entries only");
    mod.def(
        "oracle_expand",
        [](const KTFamily& fam, const CohClass& f) { return expansion_dict(oracle_expand(fam, f)); },
        py::arg("family"), py::arg("cls"));
    mod.def(
        "structure_constants",
        [](const KTFamily& fam, int i, int j) { return expansion_dict(structure_constants(fam, i, j)); },
        py::arg("family"), py::arg("i"), py::arg("j"));
    mod.def(
        "present",
        [](const KTFamily& fam) {
            const auto gens = build_ideal(fam);
            const json payload{{"m", fam.m()},
                               {"g1", gens.g1.text()},
                               {"g2", gens.g2.text()},
                               {"g3", gens.g3.text()},
                               {"phi_kills_generators",
                                json::array({apply_phi(fam, gens.g1).is_zero(), apply_phi(fam, gens.g2).is_zero(),
                                             apply_phi(fam, gens.g3).is_zero()})}};
            return json_to_py(payload);
        },
        py::arg("family"));
    mod.def(
        "stability", [](int m1, int m2) { return json_to_py(stability_json(stability_check(m1, m2))); },
        py::arg("m1"), py::arg("m2"));
}
