#include "avd/bipartite_coloring.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "avd/error.hpp"

namespace avd {

namespace {

void require_bipartite(const Graph& h, const BipartitionCertificate& cert) {
    if (!cert.parts) throw Error(ErrorCode::NotBipartite, "certificate carries an odd cycle");
    std::vector<int> side(static_cast<std::size_t>(h.vertex_count()), -1);
    for (Vertex v : cert.parts->first) side.at(static_cast<std::size_t>(v)) = 0;
    for (Vertex v : cert.parts->second) side.at(static_cast<std::size_t>(v)) = 1;
    if (std::find(side.begin(), side.end(), -1) != side.end())
        throw Error(ErrorCode::NotBipartite, "certificate does not cover every vertex");
    for (const Edge& e : h.edges())
        if (side[static_cast<std::size_t>(e.u)] == side[static_cast<std::size_t>(e.v)])
            throw Error(ErrorCode::NotBipartite,
                        "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " inside one part");
}

}  // namespace

std::vector<Color> konig_edge_coloring(const Graph& h, const BipartitionCertificate& cert,
                                       const std::vector<Color>& palette) {
    require_bipartite(h, cert);
    const int delta = max_degree(h);
    if (static_cast<int>(palette.size()) != delta || std::set<Color>(palette.begin(), palette.end()).size() != palette.size())
        throw Error(ErrorCode::BadPaletteSize,
                    "need " + std::to_string(delta) + " distinct colors, got " + std::to_string(palette.size()));

    const auto n = static_cast<std::size_t>(h.vertex_count());
    const auto D = static_cast<std::size_t>(delta);
    // at[v * D + i]: neighbor joined to v by an edge of palette slot i, or -1.
    std::vector<Vertex> at(n * D, -1);
    auto slot = [&](Vertex v, int i) -> Vertex& { return at[static_cast<std::size_t>(v) * D + static_cast<std::size_t>(i)]; };
    auto first_free = [&](Vertex v) {
        for (int i = 0; i < delta; ++i)
            if (slot(v, i) < 0) return i;
        return -1;
    };

    for (const Edge& e : h.edges()) {
        int common = -1;
        for (int i = 0; i < delta && common < 0; ++i)
            if (slot(e.u, i) < 0 && slot(e.v, i) < 0) common = i;
        if (common < 0) {
            const int a = first_free(e.u);  // free at u, used at v
            const int b = first_free(e.v);  // free at v, used at u
            // Flip the a/b alternating path leaving v along a; it cannot reach u.
            std::vector<Vertex> path{e.v};
            int want = a;
            for (Vertex cur = e.v; slot(cur, want) >= 0; want = (want == a ? b : a)) {
                cur = slot(cur, want);
                path.push_back(cur);
            }
            std::vector<std::pair<Vertex, Vertex>> ab_edges;
            std::vector<int> slots;  // slot of ab_edges[i] before the flip
            int s = a;
            for (std::size_t i = 0; i + 1 < path.size(); ++i, s = (s == a ? b : a)) {
                ab_edges.emplace_back(path[i], path[i + 1]);
                slots.push_back(s);
            }
            for (std::size_t i = 0; i < ab_edges.size(); ++i) {
                slot(ab_edges[i].first, slots[i]) = -1;
                slot(ab_edges[i].second, slots[i]) = -1;
            }
            for (std::size_t i = 0; i < ab_edges.size(); ++i) {
                const int t = slots[i] == a ? b : a;
                slot(ab_edges[i].first, t) = ab_edges[i].second;
                slot(ab_edges[i].second, t) = ab_edges[i].first;
            }
            common = a;
        }
        slot(e.u, common) = e.v;
        slot(e.v, common) = e.u;
    }

    std::vector<Color> colors(static_cast<std::size_t>(h.edge_count()), 0);
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        for (int i = 0; i < delta; ++i)
            if (Vertex w = slot(v, i); w > v) colors[static_cast<std::size_t>(*h.edge_id(v, w))] = palette[static_cast<std::size_t>(i)];
    return colors;
}

TotalColoring bipartite_avd_coloring(const Graph& h, const BipartitePalette& palette, int k) {
    BipartitionCertificate cert = bipartition(h);
    if (!cert.parts) throw Error(ErrorCode::NotBipartite, "graph has an odd cycle");
    for (Color c : palette.edge_colors)
        if (c < 1 || c > k) throw Error(ErrorCode::ColorOutOfPalette, "edge color " + std::to_string(c));
    for (Color c : {palette.first_part_color, palette.second_part_color}) {
        if (c < 1 || c > k) throw Error(ErrorCode::ColorOutOfPalette, "part color " + std::to_string(c));
        if (std::find(palette.edge_colors.begin(), palette.edge_colors.end(), c) != palette.edge_colors.end())
            throw Error(ErrorCode::BadPaletteSize, "part color " + std::to_string(c) + " also used on edges");
    }
    if (palette.first_part_color == palette.second_part_color)
        throw Error(ErrorCode::BadPaletteSize, "the two parts need different colors");

    TotalColoring f = TotalColoring::for_graph(h, k);
    const auto edge_colors = konig_edge_coloring(h, cert, palette.edge_colors);
    for (EdgeId e = 0; e < h.edge_count(); ++e) f.set_edge(e, edge_colors[static_cast<std::size_t>(e)]);
    for (Vertex v : cert.parts->first) f.set_vertex(v, palette.first_part_color);
    for (Vertex v : cert.parts->second) f.set_vertex(v, palette.second_part_color);
    return f;
}

TotalColoring bipartite_avd_coloring(const Graph& h, std::optional<Color> required_edge_color, int k) {
    if (h.vertex_count() < 2) throw Error(ErrorCode::TooSmall, "bipartite avd coloring needs at least 2 vertices");
    const int delta = max_degree(h);
    if (k < delta + 2)
        throw Error(ErrorCode::PaletteTooSmall,
                    "need at least " + std::to_string(delta + 2) + " colors, got " + std::to_string(k));
    BipartitePalette p;
    if (required_edge_color) {
        const Color c = *required_edge_color;
        if (c < 1 || c > k) throw Error(ErrorCode::ColorOutOfPalette, "required edge color " + std::to_string(c));
        if (delta > 0) p.edge_colors.push_back(c);
    }
    for (Color c = 1; c <= k && static_cast<int>(p.edge_colors.size()) < delta; ++c)
        if (std::find(p.edge_colors.begin(), p.edge_colors.end(), c) == p.edge_colors.end()) p.edge_colors.push_back(c);
    std::sort(p.edge_colors.begin(), p.edge_colors.end());
    auto on_edges = [&](Color c) { return std::find(p.edge_colors.begin(), p.edge_colors.end(), c) != p.edge_colors.end(); };
    for (Color c = 1; c <= k; ++c)
        if (!on_edges(c)) {
            p.first_part_color = c;
            break;
        }
    for (Color c = k; c >= 1; --c)
        if (!on_edges(c)) {
            p.second_part_color = c;
            break;
        }
    return bipartite_avd_coloring(h, p, k);
}

}  // namespace avd
