// Command-line front end: build coronas, color them, verify colorings, run the
// exact solver, audit hypotheses, batch a corpus, export DOT.
//
// Exit codes: 0 success, 1 verification failure, 2 hypothesis or usage error,
// 3 search budget exhausted.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <vector>

#include "avd/corona_coloring.hpp"
#include "avd/error.hpp"
#include "avd/exact_solver.hpp"
#include "avd/io.hpp"

namespace fs = std::filesystem;
using namespace avd;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

int exit_code_for(const Error& e) { return e.code() == ErrorCode::BudgetExceeded ? kExitBudget : kExitUsage; }

std::vector<Graph> load_outers(const std::vector<std::string>& files) {
    std::vector<Graph> hs;
    for (const auto& f : files) hs.push_back(io::load_graph(f));
    return hs;
}

TheoremTag parse_theorem(const std::string& name, int k) {
    if (name == "gen") return TheoremTag{TheoremKind::GenCorona};
    if (name == "diff1") return TheoremTag{TheoremKind::Diff1};
    if (name == "complete") return TheoremTag{TheoremKind::CompleteH};
    if (name == "diff2") return TheoremTag{TheoremKind::Diff2};
    if (name == "bip3") return TheoremTag{TheoremKind::Bip3};
    if (name == "diffk") return TheoremTag::diffk(k);
    throw Error(ErrorCode::ParseError, "unknown theorem '" + name + "'");
}

struct BuildArgs {
    std::string center, outer, out;
    std::vector<std::string> outers;
    int l = 1;
};

int run_build(const BuildArgs& a) {
    const Graph g = io::load_graph(a.center);
    Corona corona;
    if (!a.outers.empty()) {
        if (a.l != 1) throw Error(ErrorCode::ParseError, "--l applies to simple coronas only");
        const auto hs = load_outers(a.outers);
        corona = generalized_corona(g, hs);
    } else {
        corona = l_corona(g, io::load_graph(a.outer), a.l);
    }
    io::save_text(a.out, io::format_graph(corona.graph));
    io::save_text(a.out + ".prov", io::format_provenance(corona));
    std::cout << "vertices " << corona.graph.vertex_count() << " edges " << corona.graph.edge_count() << " max_degree "
              << max_degree(corona.graph) << '\n';
    return kExitOk;
}

struct ColorArgs {
    std::string center, outer, out, trace, graph_out, theorem = "auto";
    std::vector<std::string> outers;
    int k = 0;
};

int run_color(const ColorArgs& a) {
    const Graph g = io::load_graph(a.center);
    ConstructionResult r;
    if (!a.outers.empty()) {
        if (a.theorem != "auto" && a.theorem != "gen")
            throw Error(ErrorCode::ParseError, "--outers supports only --theorem auto|gen");
        const auto hs = load_outers(a.outers);
        r = color_corona_auto(g, hs);
    } else {
        const Graph h = io::load_graph(a.outer);
        if (a.theorem == "auto") {
            r = color_corona_auto(g, h);
        } else {
            const int k = a.k > 0 ? a.k : max_degree(h) - max_degree(g);
            r = color_corona_with(parse_theorem(a.theorem, k), g, h);
        }
    }
    io::save_text(a.out, io::format_coloring(r.corona.graph, r.coloring));
    if (!a.trace.empty()) io::save_text(a.trace, format_trace(r.trace));
    if (!a.graph_out.empty()) io::save_text(a.graph_out, io::format_graph(r.corona.graph));
    std::cout << "theorem " << r.theorem.name() << " max_degree " << max_degree(r.corona.graph) << " colors_used "
              << r.colors_used() << " bound " << r.palette_bound << ' ' << (r.certified() ? "certified" : "uncertified")
              << '\n';
    if (!r.report.ok()) std::cout << r.report.describe(r.corona.graph);
    return r.certified() ? kExitOk : kExitVerify;
}

struct VerifyArgs {
    std::string graph, coloring;
    bool avd = false;
    int max_colors = 0;
};

int run_verify(const VerifyArgs& a) {
    const Graph g = io::load_graph(a.graph);
    const TotalColoring f = io::load_coloring(a.coloring, g);
    VerificationReport r = a.avd ? verify_avd(g, f) : verify_proper_total(g, f);
    const int used = used_colors(f).count;
    bool ok = r.ok();
    std::cout << r.describe(g);
    if (a.max_colors > 0 && used > a.max_colors) {
        std::cout << "uses " << used << " colors, more than " << a.max_colors << '\n';
        ok = false;
    }
    std::cout << (ok ? "ok" : "FAILED") << " colors_used " << used << '\n';
    return ok ? kExitOk : kExitVerify;
}

int run_exact(const std::string& graph, const std::string& mode, std::int64_t max_nodes) {
    const Graph g = io::load_graph(graph);
    const SearchBudget budget{max_nodes};
    int value = 0;
    if (mode == "avd")
        value = exact_avd_chromatic(g, budget);
    else if (mode == "total")
        value = exact_total_chromatic(g, budget);
    else if (mode == "chromatic")
        value = exact_chromatic_number(g, budget);
    else
        value = exact_chromatic_index(g, budget);
    std::cout << value << '\n';
    return kExitOk;
}

int run_audit(const std::string& center, const std::string& outer) {
    const Graph g = io::load_graph(center);
    const Graph h = io::load_graph(outer);
    std::cout << format_audit(applicable_theorems(g, h));
    return kExitOk;
}

std::string status_of(const Error& e) { return "error:" + std::string(error_code_name(e.code())); }

int run_corpus(const std::string& dir, const std::string& report) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".graph") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<std::pair<std::string, Graph>> graphs;
    for (const auto& f : files) graphs.emplace_back(f.stem().string(), io::load_graph(f));

    std::vector<std::string> rows;
    bool all_good = true;
    for (const auto& [gname, g] : graphs)
        for (const auto& [hname, h] : graphs) {
            std::ostringstream row;
            row << gname << '\t' << hname << '\t';
            try {
                ConstructionResult r = color_corona_auto(g, h);
                const bool ok = r.certified();
                all_good = all_good && ok;
                row << r.theorem.name() << '\t' << max_degree(r.corona.graph) << '\t' << r.colors_used() << '\t'
                    << r.palette_bound << '\t' << (ok ? "certified" : "uncertified");
            } catch (const Error& e) {
                const std::string status = e.code() == ErrorCode::NoApplicableTheorem ? "not-applicable" : status_of(e);
                const int d = max_degree(simple_corona(g, h).graph);
                row << "-\t" << d << "\t-\t-\t" << status;
            }
            rows.push_back(row.str());
        }
    std::sort(rows.begin(), rows.end());
    std::ostringstream out;
    out << "center\touter\ttheorem\tmax_degree\tcolors_used\tbound\tstatus\n";
    for (const auto& r : rows) out << r << '\n';
    io::save_text(report, out.str());
    std::cout << rows.size() << " pairs written to " << report << '\n';
    return all_good ? kExitOk : kExitVerify;
}

int run_export_dot(const std::string& graph, const std::string& coloring, const std::string& out) {
    const Graph g = io::load_graph(graph);
    if (coloring.empty()) {
        io::save_text(out, io::format_dot(g));
    } else {
        const TotalColoring f = io::load_coloring(coloring, g);
        io::save_text(out, io::format_dot(g, &f));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Corona products and avd total colorings"};
    app.require_subcommand(1);

    BuildArgs build;
    auto* build_cmd = app.add_subcommand("build", "Build a corona and its provenance sidecar");
    build_cmd->add_option("--center", build.center, "Center graph file")->required();
    auto* build_outer = build_cmd->add_option("--outer", build.outer, "Outer graph file");
    auto* build_outers = build_cmd->add_option("--outers", build.outers, "One outer graph file per center vertex")->delimiter(',');
    build_outer->excludes(build_outers);
    build_cmd->add_option("--l", build.l, "Number of corona iterations")->check(CLI::PositiveNumber);
    build_cmd->add_option("-o", build.out, "Output graph file")->required();

    ColorArgs color;
    auto* color_cmd = app.add_subcommand("color", "Color a corona by one of the constructions");
    color_cmd->add_option("--center", color.center, "Center graph file")->required();
    auto* color_outer = color_cmd->add_option("--outer", color.outer, "Outer graph file");
    auto* color_outers = color_cmd->add_option("--outers", color.outers, "One outer graph file per center vertex")->delimiter(',');
    color_outer->excludes(color_outers);
    color_cmd->add_option("--theorem", color.theorem, "Construction to run")
        ->check(CLI::IsMember({"auto", "gen", "diff1", "complete", "diff2", "bip3", "diffk"}));
    color_cmd->add_option("--k", color.k, "Degree gap for diffk (default Delta(H)-Delta(G))");
    color_cmd->add_option("-o", color.out, "Output coloring file")->required();
    color_cmd->add_option("--trace", color.trace, "Write the construction trace here");
    color_cmd->add_option("--graph-out", color.graph_out, "Also write the corona graph here");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Verify a total coloring");
    verify_cmd->add_option("--graph", verify.graph, "Graph file")->required();
    verify_cmd->add_option("--coloring", verify.coloring, "Coloring file")->required();
    verify_cmd->add_flag("--avd", verify.avd, "Also require adjacent vertex distinguishing");
    verify_cmd->add_option("--max-colors", verify.max_colors, "Fail when more colors are used");

    std::string exact_graph, exact_mode = "avd";
    std::int64_t max_nodes = kDefaultMaxNodes;
    auto* exact_cmd = app.add_subcommand("exact", "Exact chromatic values by search");
    exact_cmd->add_option("--graph", exact_graph, "Graph file")->required();
    exact_cmd->add_option("--mode", exact_mode, "avd|total|chromatic|index")
        ->check(CLI::IsMember({"avd", "total", "chromatic", "index"}));
    exact_cmd->add_option("--max-nodes", max_nodes, "Search node budget per palette size")->check(CLI::PositiveNumber);

    std::string audit_center, audit_outer;
    auto* audit_cmd = app.add_subcommand("audit", "List which constructions apply");
    audit_cmd->add_option("--center", audit_center, "Center graph file")->required();
    audit_cmd->add_option("--outer", audit_outer, "Outer graph file")->required();

    std::string corpus_dir, corpus_report;
    auto* corpus_cmd = app.add_subcommand("corpus", "Color every ordered pair of graphs in a directory");
    corpus_cmd->add_option("--dir", corpus_dir, "Directory of .graph files")->required()->check(CLI::ExistingDirectory);
    corpus_cmd->add_option("--report", corpus_report, "TSV report file")->required();

    std::string dot_graph, dot_coloring, dot_out;
    auto* dot_cmd = app.add_subcommand("export-dot", "Write a graph (and coloring) as DOT");
    dot_cmd->add_option("--graph", dot_graph, "Graph file")->required();
    dot_cmd->add_option("--coloring", dot_coloring, "Coloring file");
    dot_cmd->add_option("-o", dot_out, "Output DOT file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*build_cmd) {
            if (build.outer.empty() && build.outers.empty()) throw Error(ErrorCode::ParseError, "--outer or --outers required");
            return run_build(build);
        }
        if (*color_cmd) {
            if (color.outer.empty() && color.outers.empty()) throw Error(ErrorCode::ParseError, "--outer or --outers required");
            return run_color(color);
        }
        if (*verify_cmd) return run_verify(verify);
        if (*exact_cmd) return run_exact(exact_graph, exact_mode, max_nodes);
        if (*audit_cmd) return run_audit(audit_center, audit_outer);
        if (*corpus_cmd) return run_corpus(corpus_dir, corpus_report);
        if (*dot_cmd) return run_export_dot(dot_graph, dot_coloring, dot_out);
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return exit_code_for(e);
    }
    return kExitUsage;
}
