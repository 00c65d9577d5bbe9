#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "dspectra/charpoly.hpp"
#include "dspectra/closed_form.hpp"
#include "dspectra/enumerate.hpp"
#include "dspectra/fixtures.hpp"
#include "dspectra/graph6.hpp"
#include "dspectra/json_io.hpp"
#include "dspectra/spectral.hpp"
#include "dspectra/verify.hpp"

namespace {

using namespace dspectra;

struct Options {
    std::string kind;
    int n = 0, h = 0, s = 0, t = 0, k = 0;
    std::vector<int> parts;
    std::string graph6_path;
    int n_max = 0;  // 0 = per-kind default
    int k_max = 6;
    std::string emit = "json";
    double spectrum_tol = default_eigen_tol;
    double table_tol = 1e-3;
    std::string context;  // forbidden: "clique" | "friendship" | "" (infer)
    bool quiet = false;
};

void note(const Options& o, const std::string& line) {
    if (!o.quiet) std::cerr << line << "\n";
}

void emit_json(const json& doc) { std::cout << json_text(doc) << "\n"; }

// {front_key: front_value, ...rest} — object member order is meaningful in
// the output contract, and the json object type has no positional insert.
json with_front(const std::string& front_key, json front_value, const json& rest) {
    json doc{{front_key, std::move(front_value)}};
    for (const auto& [key, value] : rest.items()) doc[key] = value;
    return doc;
}

FamilySpec spec_of(const Options& o) {
    if (o.kind == "kh") return FamilySpec::kh(o.n, o.h);
    if (o.kind == "kst-bridge") return FamilySpec::bridge(o.s, o.t);
    if (o.kind == "kst-glued") return FamilySpec::glued(o.s, o.t);
    if (o.kind == "friendship") return FamilySpec::friendship(o.k);
    if (o.kind == "complete") return FamilySpec::complete(o.n);
    if (o.kind == "path") return FamilySpec::path(o.n);
    if (o.kind == "cycle") return FamilySpec::cycle(o.n);
    if (o.kind == "star") return FamilySpec::star(o.n);
    if (o.kind == "multipartite") return FamilySpec::multipartite(o.parts);
    if (o.kind == "clique-cone") return FamilySpec::cone(o.parts);
    throw validation_error("unknown family kind: '" + o.kind + "'");
}

// Reads a newline-delimited graph6 stream from the file given by --graph6,
// or from standard input when that value is "-".
IngestResult read_graphs(const Options& o, std::string& source_label) {
    IngestResult in;
    if (o.graph6_path == "-") {
        source_label = "stdin";
        in = ingest_graph6(std::cin, /*strict=*/false);
    } else {
        source_label = o.graph6_path;
        std::ifstream f(o.graph6_path);
        if (!f) throw parse_error("cannot open graph6 file: " + o.graph6_path);
        in = ingest_graph6(f, /*strict=*/false);
    }
    for (const std::string& warning : in.notes) note(o, source_label + ": " + warning);
    return in;
}

// ---- subcommand handlers ------------------------------------------------

int run_family(const Options& o) {
    const FamilySpec spec = spec_of(o);
    const Graph g = make_family(spec);
    if (o.emit == "graph6") {
        std::cout << graph6_encode(g) << "\n";
    } else {
        emit_json(with_front("family", family_name(spec), json_of(g)));
    }
    note(o, family_name(spec) + ": " + std::to_string(g.n) + " vertices, " +
                std::to_string(g.edge_count()) + " edges");
    return 0;
}

int run_charpoly(const Options& o) {
    if (!o.graph6_path.empty()) {
        std::string source;
        IngestResult in = read_graphs(o, source);
        json items = json::array();
        for (const Graph& g : in.graphs)
            items.push_back(json{{"graph6", graph6_encode(g)},
                                 {"n", g.n},
                                 {"poly", json_of(dist_charpoly(g))}});
        emit_json(json{{"source", source},
                       {"count", in.graphs.size()},
                       {"ingest", json_of(in)},
                       {"items", std::move(items)}});
        note(o, source + ": " + std::to_string(in.graphs.size()) + " graphs");
        return 0;
    }
    const FamilySpec spec = spec_of(o);
    const IntPolynomial p = dist_charpoly(make_family(spec));
    emit_json(json{{"family", family_name(spec)},
                   {"n", family_order(spec)},
                   {"poly", json_of(p)}});
    note(o, family_name(spec) + ": " + p.to_string());
    return 0;
}

int run_spectrum(const Options& o) {
    if (!o.graph6_path.empty()) {
        std::string source;
        IngestResult in = read_graphs(o, source);
        json items = json::array();
        for (const Graph& g : in.graphs)
            items.push_back(json{{"graph6", graph6_encode(g)},
                                 {"n", g.n},
                                 {"spectrum", json_of(eigenvalues(g, o.spectrum_tol))}});
        emit_json(json{{"source", source},
                       {"count", in.graphs.size()},
                       {"ingest", json_of(in)},
                       {"items", std::move(items)}});
        note(o, source + ": " + std::to_string(in.graphs.size()) + " graphs");
        return 0;
    }
    const FamilySpec spec = spec_of(o);
    const Spectrum s = eigenvalues(make_family(spec), o.spectrum_tol);
    emit_json(json{{"family", family_name(spec)},
                   {"n", family_order(spec)},
                   {"spectrum", json_of(s)}});
    note(o, family_name(spec) + ": lambda_1 = " + std::to_string(s.values.front()) +
                ", lambda_n = " + std::to_string(s.values.back()));
    return 0;
}

// All partitions of m into nonincreasing parts, each part >= 1.
void partitions_of(int m, int max_part, std::vector<int>& current,
                   std::vector<std::vector<int>>& out) {
    if (m == 0) {
        out.push_back(current);
        return;
    }
    for (int p = std::min(m, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions_of(m - p, p, current, out);
        current.pop_back();
    }
}

std::vector<FamilySpec> closed_form_sweep(const Options& o) {
    std::vector<FamilySpec> cases;
    if (o.kind == "kh") {
        const int n_max = o.n_max > 0 ? o.n_max : 12;
        for (int n = 4; n <= n_max; ++n)
            for (int h = 3; h <= n - 1; ++h) cases.push_back(FamilySpec::kh(n, h));
    } else if (o.kind == "kst-bridge") {
        const int n_max = o.n_max > 0 ? o.n_max : 12;
        for (int n = 4; n <= n_max; ++n)
            for (int s = 2; s <= n - s; ++s) cases.push_back(FamilySpec::bridge(s, n - s));
    } else if (o.kind == "kst-glued") {
        const int n_max = o.n_max > 0 ? o.n_max : 12;
        for (int s = 2; 2 * s - 1 <= n_max; ++s)
            for (int t = s; s + t - 1 <= n_max; ++t) cases.push_back(FamilySpec::glued(s, t));
    } else if (o.kind == "friendship") {
        for (int k = 2; k <= o.k_max; ++k) cases.push_back(FamilySpec::friendship(k));
    } else if (o.kind == "multipartite" || o.kind == "clique-cone") {
        // cones over disjoint cliques: every partition shape up to the cap
        const int n_max = o.n_max > 0 ? o.n_max : 10;
        std::vector<std::vector<int>> shapes;
        std::vector<int> current;
        for (int m = 1; m <= n_max - 1; ++m) partitions_of(m, m, current, shapes);
        for (auto& parts : shapes) cases.push_back(FamilySpec::cone(std::move(parts)));
    } else {
        throw validation_error("no closed form to verify for kind '" + o.kind + "'");
    }
    return cases;
}

int run_verify_closed_form(const Options& o) {
    const std::vector<FamilySpec> cases = closed_form_sweep(o);
    bool all_equal = true;
    std::size_t mismatches = 0;
    for (const FamilySpec& spec : cases) {
        if (closed_form(spec) != dist_charpoly(make_family(spec))) {
            all_equal = false;
            ++mismatches;
            note(o, "mismatch: " + family_name(spec));
        }
    }
    emit_json(json{{"all_equal", all_equal}, {"cases", cases.size()}});
    note(o, o.kind + ": " + std::to_string(cases.size()) + " cases, " +
                (all_equal ? "all exact" : std::to_string(mismatches) + " mismatches"));
    return all_equal ? 0 : 1;
}

int run_sign_check(const Options& o) {
    const FamilySpec spec = spec_of(o);
    const RootBracketReport brackets = factor_root_brackets(spec);
    json doc{{"family", family_name(spec)}};
    bool pass = brackets.pass;
    if (spec.kind == FamilyKind::kh || spec.kind == FamilyKind::kst_bridge ||
        spec.kind == FamilyKind::kst_glued) {
        const SignReport sign = sign_conditions(spec);
        pass = pass && sign.pass;
        doc["sign"] = json_of(sign);
    } else {
        doc["sign"] = nullptr;  // friendship roots come from the quadratic formula
    }
    doc["brackets"] = json_of(brackets);
    doc["pass"] = pass;
    emit_json(doc);
    note(o, family_name(spec) + ": " + (pass ? "root localization verified" : "CHECK FAILED"));
    return pass ? 0 : 1;
}

int run_ds_check(const Options& o) {
    const FamilySpec spec = spec_of(o);
    DsReport report;
    json doc;
    if (!o.graph6_path.empty()) {
        std::string source;
        IngestResult in = read_graphs(o, source);
        report = ds_check_stream(spec, in.graphs, source);
        doc = json_of(report);
        doc["ingest"] = json_of(in);
    } else {
        report = ds_check(spec, Threading::openmp);
        doc = json_of(report);
    }
    emit_json(doc);
    note(o, report.target + ": " + verdict_name(report.verdict));
    return report.verdict == DsVerdict::refuted ? 1 : 0;
}

int run_census(const Options& o) {
    if (!o.graph6_path.empty()) {
        std::string source;
        IngestResult in = read_graphs(o, source);
        ListCensusReport report = census_of_graphs(in.graphs);
        json doc = with_front("source", source, json_of(report));
        doc["ingest"] = json_of(in);
        emit_json(doc);
        note(o, source + ": " + std::to_string(report.graphs) + " graphs, " +
                    std::to_string(report.distinct_polynomials) + " polynomials, " +
                    std::to_string(report.nontrivial.size()) + " cospectral classes");
        return 0;
    }
    if (o.n <= 0) throw validation_error("census needs --n or --graph6");
    CensusReport report = cospectral_census(o.n, Threading::openmp);
    emit_json(json_of(report));
    note(o, "n=" + std::to_string(o.n) + ": " + std::to_string(report.connected_classes) +
                " classes, " + std::to_string(report.distinct_polynomials) + " polynomials, " +
                std::to_string(report.nontrivial.size()) + " cospectral classes");
    return 0;
}

ForbiddenContext forbidden_context(const Options& o) {
    if (o.context == "clique") return ForbiddenContext::clique_families;
    if (o.context == "friendship") return ForbiddenContext::friendship_family;
    if (!o.context.empty())
        throw validation_error("unknown context '" + o.context + "' (clique | friendship)");
    return o.kind == "friendship" ? ForbiddenContext::friendship_family
                                  : ForbiddenContext::clique_families;
}

int run_forbidden(const Options& o) {
    const ForbiddenContext context = forbidden_context(o);
    if (!o.graph6_path.empty()) {
        std::string source;
        IngestResult in = read_graphs(o, source);
        json items = json::array();
        bool all_clean = true, bounds_ok = true;
        for (const Graph& g : in.graphs) {
            ForbiddenReport r = forbidden_check(g, context);
            all_clean = all_clean && r.clean;
            bounds_ok = bounds_ok && r.bounds_ok;
            items.push_back(with_front("graph6", graph6_encode(g), json_of(r)));
        }
        emit_json(json{{"source", source},
                       {"count", in.graphs.size()},
                       {"all_clean", all_clean},
                       {"bounds_ok", bounds_ok},
                       {"items", std::move(items)}});
        note(o, source + ": " + (all_clean ? "no forbidden subgraphs" : "forbidden subgraphs found"));
        return (all_clean && bounds_ok) ? 0 : 1;
    }
    const FamilySpec spec = spec_of(o);
    ForbiddenReport r = forbidden_check(make_family(spec), context);
    emit_json(with_front("target", family_name(spec), json_of(r)));
    note(o, family_name(spec) + ": " +
                (r.clean ? "no forbidden subgraphs" : "forbidden subgraphs found"));
    return (r.clean && r.bounds_ok) ? 0 : 1;
}

int run_tables(const Options& o) {
    TableReport report = table_check(o.table_tol);
    emit_json(json_of(report));
    std::size_t ok = 0;
    for (const TableEntry& e : report.entries)
        if (e.ok) ++ok;
    for (const TableEntry& e : report.entries)
        note(o, std::string(e.ok ? "   ok  " : " FAIL  ") + e.fixture + " lambda_" +
                    std::to_string(e.index) + (e.note.empty() ? "" : "  (" + e.note + ")"));
    note(o, std::to_string(ok) + "/" + std::to_string(report.entries.size()) +
                " reference points within " + std::to_string(o.table_tol));
    return report.all_ok ? 0 : 1;
}

int run_fixtures(const Options& o) {
    json items = json::array();
    for (const Fixture& f : fixture_catalog()) {
        json item{{"name", f.name}, {"kind", f.graph ? "graph" : "matrix"}, {"n", f.order()}};
        if (f.graph) {
            item["graph6"] = graph6_encode(*f.graph);
        } else {
            json rows = json::array();
            for (int i = 0; i < f.matrix->n; ++i) {
                json row = json::array();
                for (int j = 0; j < f.matrix->n; ++j) row.push_back(f.matrix->at(i, j));
                rows.push_back(std::move(row));
            }
            item["matrix"] = std::move(rows);
        }
        if (!f.expected_spectrum.empty()) {
            json vals = json::array();
            for (double v : f.expected_spectrum) vals.push_back(json_round(v));
            item["expected_spectrum"] = std::move(vals);
        }
        if (!f.expected_points.empty()) {
            json pts = json::array();
            for (auto [idx, val] : f.expected_points)
                pts.push_back(json{{"index", idx}, {"value", json_round(val)}});
            item["expected_points"] = std::move(pts);
        }
        items.push_back(std::move(item));
    }
    emit_json(json{{"count", items.size()}, {"fixtures", std::move(items)}});
    note(o, std::to_string(fixture_catalog().size()) + " fixtures");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"exact distance-spectrum toolkit for clique-derived graph families"};
    app.require_subcommand(1);
    // --h is the clique-size option, so help lives on --help alone
    app.set_help_flag("--help", "print help and exit");

    const std::vector<std::string> kinds{"kh",   "kst-bridge", "kst-glued",    "friendship",
                                         "complete", "path",   "cycle",        "star",
                                         "multipartite", "clique-cone"};
    auto add_family_flags = [&](CLI::App* cmd, bool kind_required) {
        cmd->set_help_flag("--help", "print help and exit");
        auto* kind = cmd->add_option("--kind", o.kind, "family kind")
                         ->check(CLI::IsMember(kinds));
        if (kind_required) kind->required();
        cmd->add_option("--n", o.n, "order (complete/path/cycle/star/kh)");
        cmd->add_option("--h", o.h, "clique size (kh)");
        cmd->add_option("--s", o.s, "first clique size (kst-bridge/kst-glued)");
        cmd->add_option("--t", o.t, "second clique size (kst-bridge/kst-glued)");
        cmd->add_option("--k", o.k, "triangle count (friendship)");
        cmd->add_option("--parts", o.parts, "part sizes (multipartite/clique-cone)")
            ->delimiter(',');
        return kind;
    };
    auto add_graph6_flag = [&](CLI::App* cmd) {
        return cmd->add_option("--graph6", o.graph6_path,
                               "newline-delimited graph6 file, or - for stdin");
    };
    app.add_flag("--quiet", o.quiet, "suppress the human-readable summary on stderr");

    CLI::App* family = app.add_subcommand("family", "construct a family member");
    add_family_flags(family, true);
    family->add_option("--emit", o.emit, "output form")->check(CLI::IsMember({"json", "graph6"}));

    CLI::App* charpoly_cmd =
        app.add_subcommand("charpoly", "exact distance characteristic polynomial");
    add_family_flags(charpoly_cmd, false);
    add_graph6_flag(charpoly_cmd);

    CLI::App* spectrum = app.add_subcommand("spectrum", "floating-point distance spectrum");
    add_family_flags(spectrum, false);
    add_graph6_flag(spectrum);
    spectrum->add_option("--tol", o.spectrum_tol, "Jacobi off-diagonal tolerance");

    CLI::App* vcf = app.add_subcommand(
        "verify-closed-form", "closed-form polynomial == exact computation over a sweep");
    add_family_flags(vcf, true);
    vcf->add_option("--n-max", o.n_max, "largest order in the sweep");
    vcf->add_option("--k-max", o.k_max, "largest friendship parameter in the sweep");

    CLI::App* sign = app.add_subcommand(
        "sign-check", "sign conditions and Sturm root localization for the reduced factor");
    add_family_flags(sign, true);

    CLI::App* ds = app.add_subcommand(
        "ds-check", "is the family member determined by its distance spectrum?");
    add_family_flags(ds, true);
    add_graph6_flag(ds);

    CLI::App* census = app.add_subcommand("census", "distance-cospectral classes");
    census->set_help_flag("--help", "print help and exit");
    census->add_option("--n", o.n, "enumerate all connected graphs of this order (<= 7)");
    add_graph6_flag(census);

    CLI::App* forbidden = app.add_subcommand(
        "forbidden", "induced forbidden-subgraph scan plus bound requalification");
    add_family_flags(forbidden, false);
    add_graph6_flag(forbidden);
    forbidden->add_option("--context", o.context, "forbidden list: clique | friendship");

    CLI::App* tables =
        app.add_subcommand("tables", "reference eigenvalue tables vs fresh computation");
    tables->set_help_flag("--help", "print help and exit");
    tables->add_option("--tol", o.table_tol, "comparison tolerance");

    app.add_subcommand("fixtures", "dump the bundled fixture catalog")
        ->set_help_flag("--help", "print help and exit");

    // let global flags (--quiet) appear after the subcommand name
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // help goes to stdout, exit 0
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (app.got_subcommand("family")) return run_family(o);
        if (app.got_subcommand("charpoly")) return run_charpoly(o);
        if (app.got_subcommand("spectrum")) return run_spectrum(o);
        if (app.got_subcommand("verify-closed-form")) return run_verify_closed_form(o);
        if (app.got_subcommand("sign-check")) return run_sign_check(o);
        if (app.got_subcommand("ds-check")) return run_ds_check(o);
        if (app.got_subcommand("census")) return run_census(o);
        if (app.got_subcommand("forbidden")) return run_forbidden(o);
        if (app.got_subcommand("tables")) return run_tables(o);
        if (app.got_subcommand("fixtures")) return run_fixtures(o);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << app.help();
    return 2;
}
