#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "avd/coloring.hpp"
#include "avd/graph.hpp"

namespace avd {

enum class TheoremKind { GenCorona, Diff1, CompleteH, Diff2, Bip3, DiffK };

/// Which construction produced (or would produce) a coloring. DiffK carries
/// the degree gap k = Delta(H) - Delta(G) >= 3.
struct TheoremTag {
    TheoremKind kind = TheoremKind::GenCorona;
    int k = 0;

    static TheoremTag diffk(int k) { return {TheoremKind::DiffK, k}; }
    std::string name() const;

    friend bool operator==(const TheoremTag&, const TheoremTag&) = default;
};

/// One proof step. Serialized as `step <copy> <case> <action> <elements> <colors>`.
struct TraceStep {
    int copy = -1;
    std::string case_name;
    std::string action;
    std::string elements;  // comma separated: uN = outer vertex N of the copy, vuN = its fan edge; "-" if none
    std::string colors;    // comma separated; "-" if none
};

std::string format_trace(const std::vector<TraceStep>& trace);

struct ConstructionResult {
    TheoremTag theorem;
    Corona corona;
    TotalColoring coloring;
    int t = 3;              // palette_bound = Delta(corona) + t
    int palette_bound = 0;
    VerificationReport report;
    std::vector<TraceStep> trace;

    int colors_used() const { return used_colors(coloring).count; }
    bool certified() const { return report.ok() && colors_used() <= palette_bound && coloring.palette() <= palette_bound; }
};

struct MissingColorTarget {
    Vertex vertex;
    Color color;
};

/// An avd total k-coloring of h in which every target color is missing at its
/// target vertex and no target vertex is colored `forbidden`. Starts from a
/// solver coloring and exchanges color classes; falls back to a constrained
/// search when no exchange schedule works.
/// Throws HypothesisViolated (adjacent/duplicate targets, colors out of range)
/// and Unrealizable.
TotalColoring realize_missing_colors(const Graph& h, std::span<const MissingColorTarget> targets, Color forbidden,
                                     int k, std::vector<TraceStep>* trace = nullptr);

/// Lexicographically least pair u < w with disjoint missing-color sets.
/// Throws NotFound.
std::pair<Vertex, Vertex> find_disjoint_missing_pair(const Graph& h, const TotalColoring& f);

/// k independent vertices u_1..u_k with deg(u_i) <= Delta(H)-i+2 for
/// i in {3..k-2}, first such set in lexicographic order.
std::optional<std::vector<Vertex>> find_diffk_vertices(const Graph& h, int k);

ConstructionResult color_generalized_corona(const Graph& g, const TotalColoring& f_g, std::span<const Graph> hs, int t);
ConstructionResult color_corona_diff1(const Graph& g, const TotalColoring& f_g, const Graph& h);
ConstructionResult color_corona_complete(const Graph& g, const TotalColoring& f_g, const Graph& h);
ConstructionResult color_corona_diff2(const Graph& g, const TotalColoring& f_g, const Graph& h);
ConstructionResult color_corona_bip3(const Graph& g, const TotalColoring& f_g, const Graph& h);
ConstructionResult color_corona_diffk(const Graph& g, const TotalColoring& f_g, const Graph& h, int k);

struct HypothesisCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct TheoremAudit {
    TheoremTag tag;
    std::vector<HypothesisCheck> checks;

    bool applicable() const;
};

std::vector<TheoremAudit> applicable_theorems(const Graph& g, const Graph& h);
std::vector<TheoremAudit> applicable_theorems(const Graph& g, std::span<const Graph> hs);
std::string format_audit(const std::vector<TheoremAudit>& audits);

/// Base avd coloring of G from the exact solver: palette Delta(G)+t where
/// t = max(min_t, chi''_a(G) - Delta(G)).
struct BaseColoring {
    int t = 0;
    TotalColoring coloring;
};
BaseColoring base_avd_coloring(const Graph& g, int min_t);

/// Runs `tag`'s construction with a solver-made base coloring of g.
ConstructionResult color_corona_with(const TheoremTag& tag, const Graph& g, const Graph& h);

/// First applicable theorem in the order GenCorona, Diff1, CompleteH, Diff2,
/// Bip3, DiffK. Throws NoApplicableTheorem carrying the audit.
ConstructionResult color_corona_auto(const Graph& g, const Graph& h);
ConstructionResult color_corona_auto(const Graph& g, std::span<const Graph> hs);

}  // namespace avd
