#include "avd/coloring.hpp"

#include <algorithm>
#include <sstream>

#include "avd/error.hpp"

namespace avd {

bool TotalColoring::is_complete() const noexcept {
    auto zero = [](Color c) { return c == 0; };
    return std::none_of(vertex_.begin(), vertex_.end(), zero) && std::none_of(edge_.begin(), edge_.end(), zero);
}

std::string violation_kind_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::VertexVertex: return "VertexVertex";
        case ViolationKind::VertexEdge: return "VertexEdge";
        case ViolationKind::EdgeEdge: return "EdgeEdge";
        case ViolationKind::AvdPair: return "AvdPair";
        case ViolationKind::PaletteOverflow: return "PaletteOverflow";
    }
    return "Unknown";
}

int VerificationReport::count(ViolationKind kind) const {
    return static_cast<int>(
        std::count_if(violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; }));
}

std::string VerificationReport::describe(const Graph& g) const {
    std::ostringstream os;
    for (const Violation& v : violations) {
        os << violation_kind_name(v.kind);
        for (Vertex x : v.vertices) os << " v" << x;
        for (EdgeId e : v.edges) os << " e" << g.edge(e).u << '-' << g.edge(e).v;
        os << " colors";
        for (Color c : v.colors) os << ' ' << c;
        os << '\n';
    }
    return os.str();
}

namespace {

void require_vertex(const Graph& g, Vertex v) {
    if (!g.has_vertex(v)) throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(v) + " not in graph");
}

void require_total(const Graph& g, const TotalColoring& f) {
    if (!f.matches(g)) throw Error(ErrorCode::IncompleteColoring, "coloring does not match graph size");
    if (!f.is_complete()) throw Error(ErrorCode::IncompleteColoring, "coloring has unassigned elements");
}

}  // namespace

ColorSet color_set(const Graph& g, const TotalColoring& f, Vertex v) {
    require_vertex(g, v);
    ColorSet s;
    if (f.vertex(v) != 0) s.insert(f.vertex(v));
    for (const auto& inc : g.incidences(v))
        if (f.edge(inc.edge) != 0) s.insert(f.edge(inc.edge));
    return s;
}

ColorSet missing_colors(const Graph& g, const TotalColoring& f, Vertex v) {
    ColorSet present = color_set(g, f, v);
    ColorSet missing;
    for (Color c = 1; c <= f.palette(); ++c)
        if (!present.contains(c)) missing.insert(c);
    return missing;
}

VerificationReport verify_proper_total(const Graph& g, const TotalColoring& f) {
    require_total(g, f);
    VerificationReport r;
    const int k = f.palette();
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (f.vertex(v) < 1 || f.vertex(v) > k)
            r.violations.push_back({ViolationKind::PaletteOverflow, {v}, {}, {f.vertex(v)}});
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (f.edge(e) < 1 || f.edge(e) > k)
            r.violations.push_back({ViolationKind::PaletteOverflow, {}, {e}, {f.edge(e)}});

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (f.vertex(ed.u) == f.vertex(ed.v))
            r.violations.push_back({ViolationKind::VertexVertex, {ed.u, ed.v}, {}, {f.vertex(ed.u)}});
        for (Vertex end : {ed.u, ed.v})
            if (f.vertex(end) == f.edge(e))
                r.violations.push_back({ViolationKind::VertexEdge, {end}, {e}, {f.edge(e)}});
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto inc = g.incidences(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                if (f.edge(inc[i].edge) == f.edge(inc[j].edge)) {
                    EdgeId a = std::min(inc[i].edge, inc[j].edge), b = std::max(inc[i].edge, inc[j].edge);
                    r.violations.push_back({ViolationKind::EdgeEdge, {v}, {a, b}, {f.edge(a)}});
                }
    }
    return r;
}

VerificationReport verify_avd(const Graph& g, const TotalColoring& f) {
    VerificationReport r = verify_proper_total(g, f);
    std::vector<ColorSet> sets;
    sets.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) sets.push_back(color_set(g, f, v));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (sets[static_cast<std::size_t>(ed.u)] == sets[static_cast<std::size_t>(ed.v)])
            r.violations.push_back(
                {ViolationKind::AvdPair, {ed.u, ed.v}, {e}, sets[static_cast<std::size_t>(ed.u)].to_vector()});
    }
    return r;
}

TotalColoring swap_color_classes(const TotalColoring& f, Color a, Color b) {
    for (Color c : {a, b})
        if (c < 1 || c > f.palette())
            throw Error(ErrorCode::ColorOutOfPalette,
                        "color " + std::to_string(c) + " outside 1.." + std::to_string(f.palette()));
    auto swap_one = [a, b](Color c) { return c == a ? b : (c == b ? a : c); };
    std::vector<Color> vc = f.vertex_colors(), ec = f.edge_colors();
    std::transform(vc.begin(), vc.end(), vc.begin(), swap_one);
    std::transform(ec.begin(), ec.end(), ec.begin(), swap_one);
    return TotalColoring(f.palette(), std::move(vc), std::move(ec));
}

UsedColors used_colors(const TotalColoring& f) {
    UsedColors u;
    for (Color c : f.vertex_colors())
        if (c != 0) u.colors.insert(c);
    for (Color c : f.edge_colors())
        if (c != 0) u.colors.insert(c);
    u.count = u.colors.size();
    return u;
}

}  // namespace avd
