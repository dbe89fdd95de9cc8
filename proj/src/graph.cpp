#include "avd/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "avd/error.hpp"

namespace avd {

std::optional<EdgeId> Graph::edge_id(Vertex a, Vertex b) const {
    if (!has_vertex(a) || !has_vertex(b)) return std::nullopt;
    const auto inc = incidences(a);
    auto it = std::lower_bound(inc.begin(), inc.end(), b,
                               [](const Incidence& x, Vertex target) { return x.neighbor < target; });
    if (it == inc.end() || it->neighbor != b) return std::nullopt;
    return it->edge;
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list) {
    if (n < 0) throw Error(ErrorCode::OutOfRange, "negative vertex count");
    Graph g;
    g.edges_.reserve(edge_list.size());
    for (auto [i, j] : edge_list) {
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw Error(ErrorCode::OutOfRange,
                        "edge (" + std::to_string(i) + "," + std::to_string(j) + ") outside 0.." + std::to_string(n - 1));
        if (i == j) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(i));
        g.edges_.push_back(Edge{std::min(i, j), std::max(i, j)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.adjacency_.assign(static_cast<std::size_t>(n), {});
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges_.size()); ++e) {
        const Edge& ed = g.edges_[static_cast<std::size_t>(e)];
        g.adjacency_[static_cast<std::size_t>(ed.u)].push_back({ed.v, e});
        g.adjacency_[static_cast<std::size_t>(ed.v)].push_back({ed.u, e});
    }
    for (auto& inc : g.adjacency_)
        std::sort(inc.begin(), inc.end(), [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
    return g;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    s.degrees.resize(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) s.degrees[static_cast<std::size_t>(v)] = g.degree(v);
    if (!s.degrees.empty()) {
        auto [lo, hi] = std::minmax_element(s.degrees.begin(), s.degrees.end());
        s.min_degree = *lo;
        s.max_degree = *hi;
    }
    return s;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (const auto& inc : g.incidences(v)) {
            if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
                seen[static_cast<std::size_t>(inc.neighbor)] = 1;
                ++reached;
                stack.push_back(inc.neighbor);
            }
        }
    }
    return reached == n;
}

BipartitionCertificate bipartition(const Graph& g) {
    if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "bipartition requires a connected graph");
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> layer(n, -1);
    std::vector<Vertex> parent(n, -1);
    std::deque<Vertex> queue;
    if (n > 0) {
        layer[0] = 0;
        queue.push_back(0);
    }
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (const auto& inc : g.incidences(v)) {
            auto w = static_cast<std::size_t>(inc.neighbor);
            if (layer[w] < 0) {
                layer[w] = layer[static_cast<std::size_t>(v)] + 1;
                parent[w] = v;
                queue.push_back(inc.neighbor);
            }
        }
    }

    BipartitionCertificate cert;
    for (const Edge& e : g.edges()) {
        if ((layer[static_cast<std::size_t>(e.u)] - layer[static_cast<std::size_t>(e.v)]) % 2 != 0) continue;
        // Same parity: walk both endpoints up the BFS tree to their common ancestor.
        std::vector<Vertex> up_u{e.u}, up_v{e.v};
        Vertex a = e.u, b = e.v;
        while (a != b) {
            if (layer[static_cast<std::size_t>(a)] >= layer[static_cast<std::size_t>(b)]) {
                a = parent[static_cast<std::size_t>(a)];
                up_u.push_back(a);
            } else {
                b = parent[static_cast<std::size_t>(b)];
                up_v.push_back(b);
            }
        }
        up_v.pop_back();  // common ancestor already ends up_u
        std::vector<Vertex> cycle(up_u.rbegin(), up_u.rend());
        cycle.insert(cycle.end(), up_v.begin(), up_v.end());
        cert.odd_cycle = std::move(cycle);
        return cert;
    }

    std::pair<std::vector<Vertex>, std::vector<Vertex>> parts;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        (layer[static_cast<std::size_t>(v)] % 2 == 0 ? parts.first : parts.second).push_back(v);
    cert.parts = std::move(parts);
    return cert;
}

namespace {

bool extend_independent(const Graph& g, int k, Vertex next, std::vector<Vertex>& chosen) {
    if (static_cast<int>(chosen.size()) == k) return true;
    const int n = g.vertex_count();
    for (Vertex v = next; v < n; ++v) {
        // Not enough vertices left to reach k.
        if (n - v < k - static_cast<int>(chosen.size())) return false;
        bool ok = std::none_of(chosen.begin(), chosen.end(), [&](Vertex u) { return g.adjacent(u, v); });
        if (!ok) continue;
        chosen.push_back(v);
        if (extend_independent(g, k, v + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_independent_set(const Graph& g, int k) {
    if (k < 1) throw Error(ErrorCode::OutOfRange, "independent set size must be at least 1");
    std::vector<Vertex> chosen;
    if (extend_independent(g, k, 0, chosen)) return chosen;
    return std::nullopt;
}

bool is_independent(const Graph& g, std::span<const Vertex> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j])) return false;
    return true;
}

bool is_complete(const Graph& g) {
    const long long n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

Corona generalized_corona(const Graph& g, std::span<const Graph> hs) {
    if (static_cast<int>(hs.size()) != g.vertex_count())
        throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(g.vertex_count()) + " outer graphs, got " +
                                                   std::to_string(hs.size()));
    CoronaProvenance prov;
    prov.center_count = g.vertex_count();
    int next = g.vertex_count();
    for (const Graph& h : hs) {
        prov.copy_offset.push_back(next);
        prov.copy_size.push_back(h.vertex_count());
        next += h.vertex_count();
    }
    const int total = next;

    prov.vertex_origin.resize(static_cast<std::size_t>(total));
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        prov.vertex_origin[static_cast<std::size_t>(v)] = VertexOrigin{OriginKind::Center, v, -1, -1};

    std::vector<std::pair<int, int>> pairs;
    for (const Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
    for (int i = 0; i < static_cast<int>(hs.size()); ++i) {
        const Graph& h = hs[static_cast<std::size_t>(i)];
        const int off = prov.copy_offset[static_cast<std::size_t>(i)];
        for (Vertex x = 0; x < h.vertex_count(); ++x) {
            prov.vertex_origin[static_cast<std::size_t>(off + x)] = VertexOrigin{OriginKind::Outer, i, i, x};
            pairs.emplace_back(i, off + x);
        }
        for (const Edge& e : h.edges()) pairs.emplace_back(off + e.u, off + e.v);
    }

    Corona result{build_graph(total, pairs), std::move(prov)};
    auto& classes = result.provenance.edge_class;
    classes.resize(static_cast<std::size_t>(result.graph.edge_count()));
    const int centers = g.vertex_count();
    for (EdgeId e = 0; e < result.graph.edge_count(); ++e) {
        const Edge& ed = result.graph.edge(e);
        EdgeClass cls;
        if (ed.v < centers) {
            cls = {EdgeClassKind::CenterEdge, -1};
        } else if (ed.u < centers) {
            cls = {EdgeClassKind::FanEdge, ed.u};
        } else {
            cls = {EdgeClassKind::CopyEdge, result.provenance.vertex_origin[static_cast<std::size_t>(ed.u)].copy};
        }
        classes[static_cast<std::size_t>(e)] = cls;
    }
    return result;
}

Corona simple_corona(const Graph& g, const Graph& h) {
    std::vector<Graph> hs(static_cast<std::size_t>(g.vertex_count()), h);
    return generalized_corona(g, hs);
}

Corona l_corona(const Graph& g, const Graph& h, int l) {
    if (l < 1) throw Error(ErrorCode::OutOfRange, "l-corona needs l >= 1");
    Corona stage = simple_corona(g, h);
    for (int i = 2; i <= l; ++i) stage = simple_corona(stage.graph, h);
    return stage;
}

std::vector<Edge> fan_edges(const CoronaProvenance& prov, int copy) {
    if (copy < 0 || copy >= prov.copy_count())
        throw Error(ErrorCode::BadIndex, "copy index " + std::to_string(copy) + " out of range");
    std::vector<Edge> fan;
    const int off = prov.copy_offset[static_cast<std::size_t>(copy)];
    for (int x = 0; x < prov.copy_size[static_cast<std::size_t>(copy)]; ++x) fan.push_back(Edge{copy, off + x});
    return fan;
}

namespace graphs {

Graph single_vertex() { return build_graph(1, {}); }

Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

Graph cycle(int n) {
    if (n < 3) throw Error(ErrorCode::OutOfRange, "cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build_graph(n, e);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return build_graph(n, e);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return build_graph(a + b, e);
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

Graph complete_minus_edge(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(i == 0 && j == 1)) e.emplace_back(i, j);
    return build_graph(n, e);
}

Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
        e.emplace_back(i, i + 5);                // spokes
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return build_graph(10, e);
}

}  // namespace graphs

}  // namespace avd
