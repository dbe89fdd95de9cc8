#pragma once

#include <string>
#include <vector>

#include "avd/color_set.hpp"
#include "avd/graph.hpp"

namespace avd {

/// Colors for every vertex and edge of one graph, drawn from 1..palette.
/// Entries equal to 0 are unassigned; a coloring with no zeros is total.
/// Edge colors are indexed by the graph's EdgeId.
class TotalColoring {
public:
    TotalColoring() = default;
    TotalColoring(int palette, int vertex_count, int edge_count)
        : palette_(palette),
          vertex_(static_cast<std::size_t>(vertex_count), 0),
          edge_(static_cast<std::size_t>(edge_count), 0) {}
    TotalColoring(int palette, std::vector<Color> vertex_colors, std::vector<Color> edge_colors)
        : palette_(palette), vertex_(std::move(vertex_colors)), edge_(std::move(edge_colors)) {}

    static TotalColoring for_graph(const Graph& g, int palette) {
        return TotalColoring(palette, g.vertex_count(), g.edge_count());
    }

    int palette() const noexcept { return palette_; }
    void set_palette(int k) noexcept { palette_ = k; }

    Color vertex(Vertex v) const { return vertex_.at(static_cast<std::size_t>(v)); }
    Color edge(EdgeId e) const { return edge_.at(static_cast<std::size_t>(e)); }
    void set_vertex(Vertex v, Color c) { vertex_.at(static_cast<std::size_t>(v)) = c; }
    void set_edge(EdgeId e, Color c) { edge_.at(static_cast<std::size_t>(e)) = c; }

    const std::vector<Color>& vertex_colors() const noexcept { return vertex_; }
    const std::vector<Color>& edge_colors() const noexcept { return edge_; }

    int vertex_count() const noexcept { return static_cast<int>(vertex_.size()); }
    int edge_count() const noexcept { return static_cast<int>(edge_.size()); }

    bool matches(const Graph& g) const noexcept {
        return vertex_count() == g.vertex_count() && edge_count() == g.edge_count();
    }
    bool is_complete() const noexcept;

    friend bool operator==(const TotalColoring&, const TotalColoring&) = default;

private:
    int palette_ = 0;
    std::vector<Color> vertex_;
    std::vector<Color> edge_;
};

/// Mid-construction colorings use the same representation with zeros allowed.
using PartialTotalColoring = TotalColoring;

enum class ViolationKind { VertexVertex, VertexEdge, EdgeEdge, AvdPair, PaletteOverflow };

std::string violation_kind_name(ViolationKind kind);

/// One clash. `vertices` and `edges` hold the offending elements (EdgeIds),
/// `colors` the color(s) involved.
struct Violation {
    ViolationKind kind;
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;
    std::vector<Color> colors;
};

struct VerificationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    int count(ViolationKind kind) const;
    /// One line per violation, human readable.
    std::string describe(const Graph& g) const;
};

/// C_f(v): the color of v together with the colors of its incident edges.
ColorSet color_set(const Graph& g, const TotalColoring& f, Vertex v);
/// [k] minus C_f(v).
ColorSet missing_colors(const Graph& g, const TotalColoring& f, Vertex v);

/// Every vertex-vertex, vertex-edge and edge-edge clash plus palette overflow.
VerificationReport verify_proper_total(const Graph& g, const TotalColoring& f);
/// verify_proper_total plus one AvdPair entry per edge uv with C_f(u) == C_f(v).
VerificationReport verify_avd(const Graph& g, const TotalColoring& f);

/// Exchanges color classes a and b everywhere. Throws ColorOutOfPalette.
TotalColoring swap_color_classes(const TotalColoring& f, Color a, Color b);

struct UsedColors {
    int count = 0;
    ColorSet colors;
};
UsedColors used_colors(const TotalColoring& f);

}  // namespace avd
