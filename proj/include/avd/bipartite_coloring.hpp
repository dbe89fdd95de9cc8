#pragma once

#include <optional>
#include <vector>

#include "avd/coloring.hpp"
#include "avd/graph.hpp"

namespace avd {

/// Proper edge coloring of a bipartite graph with exactly Delta(H) colors
/// (Konig). Edges are inserted in id order; each takes the first palette color
/// free at both ends, otherwise an alternating path is flipped to free one.
/// Returned vector is indexed by EdgeId. Throws NotBipartite, BadPaletteSize.
std::vector<Color> konig_edge_coloring(const Graph& h, const BipartitionCertificate& cert,
                                       const std::vector<Color>& palette);

/// Explicit colors for the bipartite recipe: edges over `edge_colors`
/// (Delta(H) of them), every vertex of the first part gets `first_part_color`,
/// every vertex of the second part `second_part_color`.
struct BipartitePalette {
    std::vector<Color> edge_colors;
    Color first_part_color = 0;
    Color second_part_color = 0;
};

TotalColoring bipartite_avd_coloring(const Graph& h, const BipartitePalette& palette, int k);

/// Edges use c (when given) plus the smallest Delta(H)-1 other colors of [k];
/// the first part takes the least color left over, the second part the greatest.
/// Throws NotBipartite, PaletteTooSmall, ColorOutOfPalette.
TotalColoring bipartite_avd_coloring(const Graph& h, std::optional<Color> required_edge_color, int k);

}  // namespace avd
