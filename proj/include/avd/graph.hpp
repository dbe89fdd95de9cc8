#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace avd {

using Vertex = int;
using EdgeId = int;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
    Vertex neighbor;
    EdgeId edge;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted by (u, v); an edge's id is its position in that
/// order, which is also the order colorings and serializers use.
class Graph {
public:
    Graph() = default;

    int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }

    /// Incident (neighbor, edge) pairs of v, sorted by neighbor id.
    std::span<const Incidence> incidences(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(incidences(v).size()); }

    bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }
    bool adjacent(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }
    std::optional<EdgeId> edge_id(Vertex a, Vertex b) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count(); }

private:
    friend Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list);

    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
};

/// Normalizes (i < j) and deduplicates the pairs. Throws OutOfRange or LoopEdge.
Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list);
inline Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edge_list) {
    return build_graph(n, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size()));
}

struct DegreeStats {
    int max_degree = 0;
    int min_degree = 0;
    std::vector<int> degrees;
};

DegreeStats degree_stats(const Graph& g);
int max_degree(const Graph& g);

bool is_connected(const Graph& g);

/// Either a proper 2-coloring split (parts) or an odd closed walk (odd_cycle),
/// never both.
struct BipartitionCertificate {
    std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> parts;
    std::optional<std::vector<Vertex>> odd_cycle;

    bool is_bipartite() const noexcept { return parts.has_value(); }
};

/// BFS from vertex 0; the first part collects even layers. Throws Disconnected.
BipartitionCertificate bipartition(const Graph& g);

/// Lexicographically smallest independent set of size k, if any.
std::optional<std::vector<Vertex>> find_independent_set(const Graph& g, int k);

bool is_independent(const Graph& g, std::span<const Vertex> vertices);
bool is_complete(const Graph& g);

// ---------------------------------------------------------------------------
// Corona products

enum class OriginKind { Center, Outer };

struct VertexOrigin {
    OriginKind kind = OriginKind::Center;
    Vertex center = 0;       // center vertex id in G (for Outer: the copy's center)
    int copy = -1;           // copy index, Outer only
    Vertex outer_vertex = -1;  // vertex id inside H_copy, Outer only

    friend bool operator==(const VertexOrigin&, const VertexOrigin&) = default;
};

enum class EdgeClassKind { CenterEdge, CopyEdge, FanEdge };

struct EdgeClass {
    EdgeClassKind kind = EdgeClassKind::CenterEdge;
    int copy = -1;

    friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

/// Maps every corona element back to where it came from. Copy i is attached
/// to center vertex i and occupies ids copy_offset[i] .. copy_offset[i]+copy_size[i]-1.
struct CoronaProvenance {
    int center_count = 0;
    std::vector<int> copy_offset;
    std::vector<int> copy_size;
    std::vector<VertexOrigin> vertex_origin;
    std::vector<EdgeClass> edge_class;

    int copy_count() const noexcept { return static_cast<int>(copy_offset.size()); }
    Vertex corona_vertex(int copy, Vertex outer_vertex) const {
        return copy_offset.at(static_cast<std::size_t>(copy)) + outer_vertex;
    }
};

struct Corona {
    Graph graph;
    CoronaProvenance provenance;
};

/// Centers get ids 0..n_G-1, then copy i takes the next n_{H_i} ids in order.
Corona generalized_corona(const Graph& g, std::span<const Graph> hs);
Corona simple_corona(const Graph& g, const Graph& h);
/// Iterates simple_corona l times; provenance describes the last stage only.
Corona l_corona(const Graph& g, const Graph& h, int l);

/// The edges joining center `copy` to its copy, ordered by outer vertex id.
/// Throws BadIndex.
std::vector<Edge> fan_edges(const CoronaProvenance& prov, int copy);

// ---------------------------------------------------------------------------
// Small named graphs

namespace graphs {
Graph single_vertex();
Graph path(int n);              // P_n on n vertices
Graph cycle(int n);             // C_n, n >= 3
Graph complete(int n);          // K_n
Graph complete_bipartite(int a, int b);  // parts {0..a-1}, {a..a+b-1}
Graph star(int leaves);         // K_{1,leaves}, center 0
Graph complete_minus_edge(int n);  // K_n without edge {0,1}
Graph petersen();
}  // namespace graphs

}  // namespace avd
