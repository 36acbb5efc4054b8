// jug -- construct, verify and export the equivariant-cohomology data of the
// rank-one juggling varieties: moment graphs, Knutson-Tao bases, relation
// suites, structure constants, ring presentations, cross-truncation stability.
//
// Exit codes: 0 all checks pass, 1 a verification failed (payload on stdout),
// 2 usage or input error.

#include "jug/io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace jug;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return kExitPass;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitUsage;
    }
    f << content;
    return kExitPass;
}

// ---------------------------------------------------------------- verify suites

struct SuiteResult {
    bool pass = false;
    json payload;
    std::string summary;
};

SuiteResult run_gkm_suite(const KTFamily& fam, int jobs) {
    SuiteResult res;
    json per_class = json::array();
    std::size_t total = 0;
    for (int r = -fam.m(); r <= fam.m(); ++r) {
        const auto violations = verify_gkm(fam.graph(), fam.cls(r), jobs);
        total += violations.size();
        per_class.push_back({{"r", r}, {"violations", violations_json(violations)}});
    }
    res.pass = total == 0;
    res.payload = {{"classes", per_class}, {"violation_count", total}};
    res.summary = "all " + std::to_string(2 * fam.m() + 1) + " basis classes, " +
                  std::to_string(total) + " violation(s)";
    return res;
}

SuiteResult run_axiom_suite(const KTFamily& fam) {
    SuiteResult res;
    const auto report = verify_kt_axioms(fam.graph(), fam);
    res.pass = report.all_ok();
    res.payload = axiom_report_json(report);
    int exact = 0;
    for (const auto& e : report.entries) exact += e.exact_product ? 1 : 0;
    res.summary = std::to_string(report.entries.size()) + " classes, " + std::to_string(exact) +
                  " with scalar 1";
    return res;
}

SuiteResult run_relation_suite(const KTFamily& fam, int jobs) {
    SuiteResult res;
    const auto report = check_all(fam, jobs);
    res.pass = report.all_pass();
    res.payload = relation_report_json(report);
    res.summary = std::to_string(report.results.size()) + " instances";
    return res;
}

SuiteResult run_presentation_suite(const KTFamily& fam) {
    SuiteResult res;
    const auto gens = build_ideal(fam);
    const bool k1 = apply_phi(fam, gens.g1).is_zero();
    const bool k2 = apply_phi(fam, gens.g2).is_zero();
    const bool k3 = apply_phi(fam, gens.g3).is_zero();
    bool surjective = true;
    for (int r = -fam.m(); r <= fam.m(); ++r)
        surjective = surjective && apply_phi(fam, surjectivity_witness(fam, r)) == fam.cls(r);
    bool triangular = true;
    std::string defect;
    try {
        monomial_matrix(fam);
    } catch (const RankDefect& e) {
        triangular = false;
        defect = e.what();
    }
    res.pass = k1 && k2 && k3 && surjective && triangular;
    res.payload = {{"phi_kills_generators", json::array({k1, k2, k3})},
                   {"surjectivity_ok", surjective},
                   {"monomial_matrix_ok", triangular},
                   {"rank", 2 * fam.m() + 1}};
    if (!defect.empty()) res.payload["rank_defect"] = defect;
    res.summary = "generators killed, rank " + std::to_string(2 * fam.m() + 1);
    return res;
}

SuiteResult run_expansion_suite(const KTFamily& fam, unsigned long seed) {
    SuiteResult res;
    const int m = fam.m();
    std::size_t pairs = 0, randoms = 0;
    json failures = json::array();

    for (int i = -m; i <= m; ++i) {
        for (int j = i; j <= m; ++j) {
            const CohClass f = fam.cls(i) * fam.cls(j);
            const Expansion e = expand(fam, f);
            if (!(oracle_expand(fam, f) == e) || !(e.recombine(fam) == f))
                failures.push_back({{"kind", "pair"}, {"i", i}, {"j", j}});
            ++pairs;
        }
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> expo(0, 2);
    std::uniform_int_distribution<int> numer(-9, 9);
    std::uniform_int_distribution<int> denom(1, 4);
    std::uniform_int_distribution<int> nterms(0, 2);
    for (int trial = 0; trial < 50; ++trial) {
        Expansion chosen(m);
        CohClass f(m);
        for (int r = -m; r <= m; ++r) {
            BiPoly c;
            const int n = nterms(rng);
            for (int t = 0; t < n; ++t)
                c += BiPoly::monomial(expo(rng), expo(rng), Rational(numer(rng), denom(rng)));
            chosen.set(r, c);
            f = f + fam.cls(r).scaled(c);
        }
        if (!(expand(fam, f) == chosen) || !(oracle_expand(fam, f) == chosen))
            failures.push_back({{"kind", "random"}, {"trial", trial}});
        ++randoms;
    }

    res.pass = failures.empty();
    res.payload = {{"kt_pairs", pairs}, {"random_combinations", randoms}, {"seed", seed}, {"failures", failures}};
    res.summary = std::to_string(pairs) + " products + " + std::to_string(randoms) + " random combinations";
    return res;
}

json verify_one(int m, const std::string& suite, unsigned long seed, int jobs, bool& pass,
                std::ostringstream& text) {
    const auto g = MomentGraph::build(m);
    const auto fam = KTFamily::build(g);

    std::vector<std::pair<std::string, SuiteResult>> results;
    const auto want = [&](const char* name) { return suite == "all" || suite == name; };
    if (want("gkm")) results.emplace_back("gkm", run_gkm_suite(fam, jobs));
    if (want("kt-axioms")) results.emplace_back("kt-axioms", run_axiom_suite(fam));
    if (want("relations")) results.emplace_back("relations", run_relation_suite(fam, jobs));
    if (want("presentation")) results.emplace_back("presentation", run_presentation_suite(fam));
    if (want("expansion")) results.emplace_back("expansion", run_expansion_suite(fam, seed));

    bool m_pass = true;
    json suites = json::object();
    for (const auto& [name, r] : results) {
        m_pass = m_pass && r.pass;
        suites[name] = {{"pass", r.pass}, {"detail", r.payload}};
        text << (r.pass ? "PASS" : "FAIL") << " " << name << " (m=" << m << "): " << r.summary << "\n";
    }
    if (!m_pass) {
        json detail = json::object();
        for (const auto& [name, r] : results)
            if (!r.pass) detail[name] = r.payload;
        text << detail.dump(2) << "\n";
    }
    pass = pass && m_pass;
    return {{"m", m}, {"pass", m_pass}, {"suites", suites}};
}

int run_verify(int m, int m_max, const std::string& suite, const std::string& format, unsigned long seed,
               int jobs, const std::string& out_path) {
    if (m_max < m) throw BadParameters("--m-max must be >= --m");
    bool pass = true;
    std::ostringstream text;
    json runs = json::array();
    for (int mm = m; mm <= m_max; ++mm) runs.push_back(verify_one(mm, suite, seed, jobs, pass, text));

    std::string content;
    if (format == "json") {
        json payload{{"suite", suite}, {"pass", pass}, {"runs", runs}};
        content = payload.dump(2) + "\n";
    } else {
        content = text.str();
    }
    const int rc = emit(content, out_path);
    if (rc != kExitPass) return rc;
    return pass ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- other commands

int run_graph(int m, const std::string& format, const std::string& out_path) {
    const auto g = MomentGraph::build(m);
    std::string content;
    if (format == "dot")
        content = graph_dot(g);
    else if (format == "json")
        content = graph_json(g).dump(2) + "\n";
    else
        content = graph_text(g);
    return emit(content, out_path);
}

int run_kt(int m, const std::string& format, const std::string& out_path) {
    const auto fam = KTFamily::build(MomentGraph::build(m));
    std::string content;
    if (format == "csv")
        content = kt_table_csv(fam);
    else if (format == "json")
        content = kt_table_json(fam).dump(2) + "\n";
    else
        content = kt_table_text(fam);
    return emit(content, out_path);
}

int run_expand(const std::string& in_path, bool check_gkm, const std::string& format,
               const std::string& out_path) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << in_path << "\n";
        return kExitUsage;
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        std::cerr << "error: bad JSON in " << in_path << ": " << e.what() << "\n";
        return kExitUsage;
    }
    const CohClass f = cohclass_from_json(j);
    const auto fam = KTFamily::build(MomentGraph::build(f.m()));
    Expansion e(f.m());
    try {
        e = expand(fam, f, check_gkm);
    } catch (const NotInSpan& err) {
        const json payload{{"error", "not_in_span"}, {"q", err.q}, {"side", err.side}, {"message", err.what()}};
        std::cout << payload.dump(2) << "\n";
        return kExitFail;
    }
    const std::string content = format == "json" ? expansion_json(e).dump(2) + "\n" : expansion_text(e);
    return emit(content, out_path);
}

int run_constants(int m, std::optional<int> i, std::optional<int> j, const std::string& format, int jobs,
                  const std::string& out_path) {
    const auto fam = KTFamily::build(MomentGraph::build(m));
    std::string content;
    if (i && j) {
        const Expansion e = structure_constants(fam, *i, *j);
        if (format == "json")
            content = json{{"m", m}, {"i", *i}, {"j", *j}, {"expansion", expansion_json(e)}}.dump(2) + "\n";
        else
            content = "i,j,r,poly\n" + constants_csv(*i, *j, e);
        return emit(content, out_path);
    }
    const auto table = full_table(fam, jobs);
    content = format == "json" ? structure_table_json(table).dump(2) + "\n" : constants_csv(fam, table);
    return emit(content, out_path);
}

int run_present(int m, const std::string& format, const std::string& out_path) {
    const auto fam = KTFamily::build(MomentGraph::build(m));
    const auto gens = build_ideal(fam);
    const bool k1 = apply_phi(fam, gens.g1).is_zero();
    const bool k2 = apply_phi(fam, gens.g2).is_zero();
    const bool k3 = apply_phi(fam, gens.g3).is_zero();
    const auto mm = monomial_matrix(fam);

    json diag = json::array();
    for (int i = 1; i <= m; ++i) {
        const int pi = MonomialMatrix::diagonal_index(i, true);
        const int mi = MonomialMatrix::diagonal_index(i, false);
        diag.push_back({{"power", i},
                        {"generator", "xp"},
                        {"index", pi},
                        {"coeff", mm.plus_pow[static_cast<std::size_t>(i - 1)].coeff(pi).text()}});
        diag.push_back({{"power", i},
                        {"generator", "xm"},
                        {"index", mi},
                        {"coeff", mm.minus_pow[static_cast<std::size_t>(i - 1)].coeff(mi).text()}});
    }
    const json payload{{"m", m},
                       {"generators",
                        {{"g1", genpoly_json(gens.g1)}, {"g2", genpoly_json(gens.g2)}, {"g3", genpoly_json(gens.g3)}}},
                       {"phi_kills_generators", json::array({k1, k2, k3})},
                       {"monomial_matrix", {{"rank", mm.rank()}, {"diagonal", diag}}}};
    std::string content;
    if (format == "json") {
        content = payload.dump(2) + "\n";
    } else {
        std::ostringstream text;
        text << "presentation of the equivariant cohomology ring, m=" << m << "\n";
        text << "  g1 = " << gens.g1.text() << "\n";
        text << "  g2 = " << gens.g2.text() << "\n";
        text << "  g3 = " << gens.g3.text() << "\n";
        text << "  phi(g1)=0: " << (k1 ? "yes" : "NO") << "  phi(g2)=0: " << (k2 ? "yes" : "NO")
             << "  phi(g3)=0: " << (k3 ? "yes" : "NO") << "\n";
        text << "  module rank: " << mm.rank() << "\n";
        content = text.str();
    }
    const int rc = emit(content, out_path);
    if (rc != kExitPass) return rc;
    return (k1 && k2 && k3) ? kExitPass : kExitFail;
}

int run_stability(int from, int to, const std::string& format, const std::string& out_path) {
    if (from < 1 || to <= from) throw BadParameters("stability sweep needs 1 <= from < to");
    json pairs = json::array();
    bool pass = true;
    std::ostringstream text;
    for (int m1 = from; m1 < to; ++m1) {
        const auto rep = stability_check(m1, m1 + 1);
        pass = pass && rep.pass();
        pairs.push_back(stability_json(rep));
        text << (rep.pass() ? "PASS" : "FAIL") << " stability m=" << m1 << " vs m=" << m1 + 1 << ": "
             << rep.constants_checked << " constants, " << rep.products_checked << " products\n";
    }
    std::string content;
    if (format == "json")
        content = json{{"from", from}, {"to", to}, {"pass", pass}, {"pairs", pairs}}.dump(2) + "\n";
    else
        content = text.str();
    const int rc = emit(content, out_path);
    if (rc != kExitPass) return rc;
    return pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant cohomology of rank-one juggling varieties"};
    app.require_subcommand(1);

    std::function<int()> action;

    {
        auto* cmd = app.add_subcommand("graph", "export the moment graph");
        auto m = std::make_shared<int>(1);
        auto format = std::make_shared<std::string>("text");
        auto out = std::make_shared<std::string>();
        cmd->add_option("--m", *m, "truncation parameter")->required();
        cmd->add_option("--format", *format)->check(CLI::IsMember({"dot", "json", "text"}));
        cmd->add_option("--out", *out, "write to file instead of stdout");
        cmd->callback([&action, m, format, out] { action = [=] { return run_graph(*m, *format, *out); }; });
    }
    {
        auto* cmd = app.add_subcommand("kt", "tabulate the Knutson-Tao basis");
        auto m = std::make_shared<int>(1);
        auto format = std::make_shared<std::string>("text");
        auto out = std::make_shared<std::string>();
        cmd->add_option("--m", *m)->required();
        cmd->add_option("--format", *format)->check(CLI::IsMember({"csv", "json", "text"}));
        cmd->add_option("--out", *out);
        cmd->callback([&action, m, format, out] { action = [=] { return run_kt(*m, *format, *out); }; });
    }
    {
        auto* cmd = app.add_subcommand("verify", "run a verification suite");
        auto m = std::make_shared<int>(1);
        auto m_max = std::make_shared<int>(0);
        auto suite = std::make_shared<std::string>("all");
        auto format = std::make_shared<std::string>("text");
        auto seed = std::make_shared<unsigned long>(42);
        auto jobs = std::make_shared<int>(1);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--m", *m)->required();
        auto* omax = cmd->add_option("--m-max", *m_max, "sweep every truncation in [m, m-max]");
        cmd->add_option("--suite", *suite)
            ->check(CLI::IsMember({"gkm", "kt-axioms", "relations", "presentation", "expansion", "all"}));
        cmd->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--seed", *seed, "seed for the randomized expansion suite");
        cmd->add_option("--jobs", *jobs)->check(CLI::PositiveNumber);
        cmd->add_option("--out", *out);
        cmd->callback([&action, m, m_max, suite, format, seed, jobs, out, omax] {
            const int hi = omax->count() > 0 ? *m_max : *m;
            action = [=] { return run_verify(*m, hi, *suite, *format, *seed, *jobs, *out); };
        });
    }
    {
        auto* cmd = app.add_subcommand("expand", "expand a class file in the KT basis");
        auto in = std::make_shared<std::string>();
        auto check = std::make_shared<bool>(false);
        auto format = std::make_shared<std::string>("text");
        auto out = std::make_shared<std::string>();
        cmd->add_option("--in", *in, "CohClass JSON file")->required();
        cmd->add_flag("--check-gkm", *check, "verify the GKM congruences first");
        cmd->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", *out);
        cmd->callback([&action, in, check, format, out] {
            action = [=] { return run_expand(*in, *check, *format, *out); };
        });
    }
    {
        auto* cmd = app.add_subcommand("constants", "structure constants in the KT basis");
        auto m = std::make_shared<int>(1);
        auto i = std::make_shared<int>(0);
        auto j = std::make_shared<int>(0);
        auto format = std::make_shared<std::string>("csv");
        auto jobs = std::make_shared<int>(1);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--m", *m)->required();
        auto* oi = cmd->add_option("--i", *i, "first basis index");
        auto* oj = cmd->add_option("--j", *j, "second basis index");
        oi->needs(oj);
        oj->needs(oi);
        cmd->add_option("--format", *format)->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--jobs", *jobs)->check(CLI::PositiveNumber);
        cmd->add_option("--out", *out);
        cmd->callback([&action, m, i, j, format, jobs, out, oi] {
            const bool single = oi->count() > 0;
            action = [=] {
                return run_constants(*m, single ? std::optional<int>(*i) : std::nullopt,
                                     single ? std::optional<int>(*j) : std::nullopt, *format, *jobs, *out);
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("present", "generators-and-relations presentation");
        auto m = std::make_shared<int>(1);
        auto format = std::make_shared<std::string>("text");
        auto out = std::make_shared<std::string>();
        cmd->add_option("--m", *m)->required();
        cmd->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", *out);
        cmd->callback([&action, m, format, out] { action = [=] { return run_present(*m, *format, *out); }; });
    }
    {
        auto* cmd = app.add_subcommand("stability", "cross-truncation stability sweep");
        auto from = std::make_shared<int>(1);
        auto to = std::make_shared<int>(2);
        auto format = std::make_shared<std::string>("text");
        auto out = std::make_shared<std::string>();
        cmd->add_option("--from", *from)->required();
        cmd->add_option("--to", *to)->required();
        cmd->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", *out);
        cmd->callback([&action, from, to, format, out] {
            action = [=] { return run_stability(*from, *to, *format, *out); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const NotInSpan& e) {
        std::cout << json{{"error", "not_in_span"}, {"q", e.q}, {"side", e.side}, {"message", e.what()}}.dump(2)
                  << "\n";
        return kExitFail;
    } catch (const IntegralityViolation& e) {
        std::cout << json{{"error", "integrality_violation"}, {"message", e.what()}}.dump(2) << "\n";
        return kExitFail;
    } catch (const RankDefect& e) {
        std::cout << json{{"error", "rank_defect"}, {"message", e.what()}}.dump(2) << "\n";
        return kExitFail;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
