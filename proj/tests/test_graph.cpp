#include <doctest.h>

#include <random>

#include "avd/error.hpp"
#include "avd/graph.hpp"
#include "oracles.hpp"

using namespace avd;

namespace {

Graph c4() { return graphs::cycle(4); }

template <typename F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::NotFound;
}

}  // namespace

TEST_CASE("build_graph normalizes and deduplicates") {
    Graph k2 = build_graph(2, {{0, 1}});
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    Graph c = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c.edge_count() == 4);
    CHECK(c.edge(1) == Edge{0, 3});

    Graph dup = build_graph(3, {{0, 1}, {0, 1}, {1, 2}});
    CHECK(dup.edge_count() == 2);
    Graph rev = build_graph(3, {{1, 0}, {2, 1}});
    CHECK(rev == dup);
}

TEST_CASE("build_graph rejects bad input") {
    CHECK(code_of([] { build_graph(2, {{0, 2}}); }) == ErrorCode::OutOfRange);
    CHECK(code_of([] { build_graph(2, {{-1, 0}}); }) == ErrorCode::OutOfRange);
    CHECK(code_of([] { build_graph(2, {{1, 1}}); }) == ErrorCode::LoopEdge);
}

TEST_CASE("adjacency is symmetric and incidences sorted") {
    Graph p = graphs::petersen();
    for (Vertex a = 0; a < p.vertex_count(); ++a) {
        CHECK(p.degree(a) == 3);
        Vertex last = -1;
        for (const auto& inc : p.incidences(a)) {
            CHECK(inc.neighbor > last);
            last = inc.neighbor;
            CHECK(p.adjacent(inc.neighbor, a));
            CHECK(p.edge_id(a, inc.neighbor) == inc.edge);
        }
    }
    CHECK_FALSE(p.edge_id(0, 0).has_value());
}

TEST_CASE("degree_stats") {
    auto s = degree_stats(graphs::complete(2));
    CHECK(s.max_degree == 1);
    CHECK(s.min_degree == 1);
    s = degree_stats(c4());
    CHECK(s.max_degree == 2);
    CHECK(s.min_degree == 2);
    s = degree_stats(graphs::star(3));
    CHECK(s.max_degree == 3);
    CHECK(s.min_degree == 1);
    CHECK(s.degrees == std::vector<int>{3, 1, 1, 1});
}

TEST_CASE("is_connected") {
    CHECK(is_connected(c4()));
    CHECK_FALSE(is_connected(build_graph(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(graphs::single_vertex()));
}

TEST_CASE("bipartition examples") {
    auto cert = bipartition(c4());
    REQUIRE(cert.is_bipartite());
    CHECK(cert.parts->first == std::vector<Vertex>{0, 2});
    CHECK(cert.parts->second == std::vector<Vertex>{1, 3});

    cert = bipartition(graphs::complete(3));
    REQUIRE_FALSE(cert.is_bipartite());
    CHECK(*cert.odd_cycle == std::vector<Vertex>{0, 1, 2});

    cert = bipartition(graphs::complete_bipartite(2, 4));
    REQUIRE(cert.is_bipartite());
    CHECK(cert.parts->first.size() == 2);
    CHECK(cert.parts->second.size() == 4);

    CHECK(code_of([] { bipartition(build_graph(4, {{0, 1}, {2, 3}})); }) == ErrorCode::Disconnected);
}

TEST_CASE("bipartition agrees with exhaustive 2-coloring on random graphs") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 7;
        Graph g = oracle::random_connected(rng, n, 0.25);
        auto cert = bipartition(g);
        CHECK(cert.is_bipartite() == oracle::bipartite(oracle::plain(g)));
        if (cert.is_bipartite()) {
            std::vector<int> side(static_cast<std::size_t>(n), -1);
            for (Vertex v : cert.parts->first) side[static_cast<std::size_t>(v)] = 0;
            for (Vertex v : cert.parts->second) side[static_cast<std::size_t>(v)] = 1;
            for (const Edge& e : g.edges()) CHECK(side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]);
        } else {
            const auto& cyc = *cert.odd_cycle;
            CHECK(cyc.size() % 2 == 1);
            for (std::size_t i = 0; i < cyc.size(); ++i) CHECK(g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
        }
    }
}

TEST_CASE("find_independent_set examples and oracle") {
    CHECK(*find_independent_set(c4(), 2) == std::vector<Vertex>{0, 2});
    CHECK_FALSE(find_independent_set(graphs::complete(4), 2).has_value());
    CHECK(*find_independent_set(graphs::complete_bipartite(2, 4), 3) == std::vector<Vertex>{2, 3, 4});
    CHECK(code_of([] { find_independent_set(graphs::complete(3), 0); }) == ErrorCode::OutOfRange);

    std::mt19937 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = oracle::random_connected(rng, 3 + trial % 6, 0.3);
        for (int k = 1; k <= 4; ++k) {
            auto got = find_independent_set(g, k);
            auto want = oracle::independent_set(oracle::plain(g), k);
            CHECK(got == want);
            if (got) CHECK(is_independent(g, *got));
        }
    }
}

TEST_CASE("simple_corona counts") {
    Corona c = simple_corona(graphs::complete(2), graphs::complete(2));
    CHECK(c.graph.vertex_count() == 6);
    CHECK(c.graph.edge_count() == 7);
    CHECK(max_degree(c.graph) == 3);

    c = simple_corona(c4(), graphs::complete(2));
    CHECK(c.graph.vertex_count() == 12);
    CHECK(max_degree(c.graph) == 4);

    c = simple_corona(graphs::path(2), graphs::path(3));
    CHECK(c.graph.vertex_count() == 8);
    CHECK(c.graph.edge_count() == 11);
}

TEST_CASE("generalized_corona examples") {
    const std::vector<Graph> fig{graphs::cycle(3), graphs::path(3), graphs::path(4), graphs::path(2)};
    Corona c = generalized_corona(c4(), fig);
    CHECK(c.graph.vertex_count() == 16);
    CHECK(c.graph.edge_count() == 25);
    CHECK(max_degree(c.graph) == 6);
    CHECK(fan_edges(c.provenance, 2).size() == 4);

    const std::vector<Graph> pendants{graphs::single_vertex(), graphs::single_vertex()};
    c = generalized_corona(graphs::complete(2), pendants);
    CHECK(c.graph.vertex_count() == 4);
    CHECK(c.graph.edge_count() == 3);

    const std::vector<Graph> twice{graphs::complete(2), graphs::complete(2)};
    CHECK(generalized_corona(graphs::complete(2), twice).graph ==
          simple_corona(graphs::complete(2), graphs::complete(2)).graph);

    const std::vector<Graph> short_list{graphs::complete(2)};
    CHECK(code_of([&] { generalized_corona(graphs::complete(2), short_list); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("l_corona examples") {
    CHECK(l_corona(graphs::complete(2), graphs::complete(2), 1).graph ==
          simple_corona(graphs::complete(2), graphs::complete(2)).graph);
    Corona c = l_corona(graphs::complete(2), graphs::complete(2), 2);
    CHECK(c.graph.vertex_count() == 18);
    CHECK(max_degree(c.graph) == 5);
    c = l_corona(c4(), graphs::single_vertex(), 2);
    CHECK(c.graph.vertex_count() == 16);
    CHECK(max_degree(c.graph) == 4);
    CHECK(code_of([] { l_corona(graphs::complete(2), graphs::complete(2), 0); }) == ErrorCode::OutOfRange);
}

TEST_CASE("fan_edges") {
    Corona c = simple_corona(graphs::complete(2), graphs::complete(2));
    auto fan = fan_edges(c.provenance, 0);
    CHECK(fan == std::vector<Edge>{{0, 2}, {0, 3}});
    CHECK(code_of([&] { fan_edges(c.provenance, 2); }) == ErrorCode::BadIndex);
    CHECK(code_of([&] { fan_edges(c.provenance, -1); }) == ErrorCode::BadIndex);
}

TEST_CASE("corona properties on random inputs") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = oracle::random_connected(rng, 2 + trial % 5, 0.3);
        std::vector<Graph> hs;
        for (int i = 0; i < g.vertex_count(); ++i) hs.push_back(oracle::random_connected(rng, 2 + (trial + i) % 4, 0.4));
        Corona c = generalized_corona(g, hs);
        const auto& prov = c.provenance;

        // Provenance partitions vertices and edges.
        int centers = 0;
        std::vector<int> outers(hs.size(), 0), copy_edges(hs.size(), 0), fans(hs.size(), 0);
        for (const auto& o : prov.vertex_origin) {
            if (o.kind == OriginKind::Center) ++centers;
            else ++outers[static_cast<std::size_t>(o.copy)];
        }
        int center_edges = 0;
        for (EdgeId e = 0; e < c.graph.edge_count(); ++e) {
            const auto& cl = prov.edge_class[static_cast<std::size_t>(e)];
            if (cl.kind == EdgeClassKind::CenterEdge) ++center_edges;
            if (cl.kind == EdgeClassKind::CopyEdge) ++copy_edges[static_cast<std::size_t>(cl.copy)];
            if (cl.kind == EdgeClassKind::FanEdge) {
                ++fans[static_cast<std::size_t>(cl.copy)];
                CHECK(c.graph.edge(e).u == cl.copy);
            }
        }
        CHECK(centers == g.vertex_count());
        CHECK(center_edges == g.edge_count());
        for (std::size_t i = 0; i < hs.size(); ++i) {
            CHECK(outers[i] == hs[i].vertex_count());
            CHECK(copy_edges[i] == hs[i].edge_count());
            CHECK(fans[i] == hs[i].vertex_count());
        }

        // Degree sandwich.
        int lo = 1 << 20, hi = 0;
        for (const Graph& h : hs) {
            lo = std::min(lo, h.vertex_count());
            hi = std::max(hi, h.vertex_count());
        }
        const auto stats = degree_stats(g);
        CHECK(stats.min_degree + lo <= max_degree(c.graph));
        CHECK(max_degree(c.graph) <= stats.max_degree + hi);

        // Simple corona degree and l-corona vertex recurrence.
        const Graph& h = hs.front();
        CHECK(max_degree(simple_corona(g, h).graph) == max_degree(g) + h.vertex_count());
        int n = g.vertex_count();
        for (int l = 1; l <= 3; ++l) {
            n *= 1 + h.vertex_count();
            Corona lc = l_corona(g, h, l);
            CHECK(lc.graph.vertex_count() == n);
            CHECK(max_degree(lc.graph) == max_degree(g) + l * h.vertex_count());
        }
    }
}

TEST_CASE("named graphs") {
    CHECK(graphs::complete_minus_edge(4).edge_count() == 5);
    CHECK_FALSE(graphs::complete_minus_edge(4).adjacent(0, 1));
    CHECK(graphs::star(4).degree(0) == 4);
    CHECK(graphs::petersen().edge_count() == 15);
    CHECK(is_complete(graphs::complete(5)));
    CHECK_FALSE(is_complete(graphs::cycle(4)));
}
