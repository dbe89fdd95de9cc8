#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "avd/coloring.hpp"
#include "avd/graph.hpp"

namespace avd {

/// Side conditions a searched coloring must satisfy.
struct ColoringConstraints {
    std::map<Vertex, std::set<Color>> forbidden_vertex_colors;  // f(v) must avoid these
    std::map<Vertex, std::set<Color>> required_missing;         // these must lie outside C_f(v)
    std::map<Vertex, Color> fixed_vertices;
    std::map<std::pair<Vertex, Vertex>, Color> fixed_edges;  // key (i, j), either order

    bool empty() const {
        return forbidden_vertex_colors.empty() && required_missing.empty() && fixed_vertices.empty() &&
               fixed_edges.empty();
    }
    /// True when f honors every entry.
    bool satisfied_by(const Graph& g, const TotalColoring& f) const;
};

constexpr std::int64_t kDefaultMaxNodes = 50'000'000;

struct SearchBudget {
    std::int64_t max_nodes = kDefaultMaxNodes;
};

enum class SearchStatus { Found, Unsatisfiable, Exhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::Unsatisfiable;
    std::optional<TotalColoring> coloring;
    std::int64_t nodes = 0;

    bool found() const noexcept { return status == SearchStatus::Found; }
};

enum class SearchMode { ProperTotal, AvdTotal };

/// Lower bound on the avd total chromatic number: Delta+2 when two maximum-degree
/// vertices are adjacent, Delta+1 otherwise. Throws TooSmall when n < 2.
int avd_lower_bound(const Graph& g);

/// Depth-first search over elements in fixed order (vertices by id, then edges
/// by (u, v)), colors ascending; returns the first solution in that order.
/// Palettes above 63 colors are rejected (OutOfRange).
SearchResult find_constrained_coloring(const Graph& g, int k, SearchMode mode, const ColoringConstraints& c,
                                       SearchBudget budget = {});

inline SearchResult find_constrained_avd_coloring(const Graph& g, int k, const ColoringConstraints& c,
                                                  SearchBudget budget = {}) {
    return find_constrained_coloring(g, k, SearchMode::AvdTotal, c, budget);
}

struct ChromaticResult {
    int value = 0;
    TotalColoring coloring;  // a witness using `value` colors
};

/// Smallest k with an avd total k-coloring, searched upward from avd_lower_bound.
/// Throws Disconnected, TooSmall, BudgetExceeded.
ChromaticResult exact_avd_chromatic_with_witness(const Graph& g, SearchBudget budget = {});
int exact_avd_chromatic(const Graph& g, SearchBudget budget = {});

/// Smallest k with a proper total k-coloring, searched upward from Delta+1.
ChromaticResult exact_total_chromatic_with_witness(const Graph& g, SearchBudget budget = {});
int exact_total_chromatic(const Graph& g, SearchBudget budget = {});

int exact_chromatic_number(const Graph& g, SearchBudget budget = {});
int exact_chromatic_index(const Graph& g, SearchBudget budget = {});

}  // namespace avd
