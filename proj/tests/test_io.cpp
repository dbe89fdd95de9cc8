#include <doctest.h>

#include <random>

#include "avd/corona_coloring.hpp"
#include "avd/error.hpp"
#include "avd/io.hpp"
#include "oracles.hpp"

using namespace avd;

namespace {

ErrorCode parse_error(const std::string& text) {
    try {
        io::parse_graph(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::NotFound;
}

}  // namespace

TEST_CASE("graph format") {
    Graph g = io::parse_graph("# a comment\n\nvertices 4\nedge 1 0\n  # another\nedge 2 3\nedge 0 1\n");
    CHECK(g == build_graph(4, {{0, 1}, {2, 3}}));
    CHECK(io::format_graph(g) == "vertices 4\nedge 0 1\nedge 2 3\n");
    CHECK(io::parse_graph("vertices 1\r\n") == graphs::single_vertex());

    CHECK(parse_error("") == ErrorCode::ParseError);
    CHECK(parse_error("edge 0 1\n") == ErrorCode::ParseError);
    CHECK(parse_error("vertices x\n") == ErrorCode::ParseError);
    CHECK(parse_error("vertices 2\nedge 0 2\n") == ErrorCode::ParseError);
    CHECK(parse_error("vertices 2\nedge 1 1\n") == ErrorCode::ParseError);
    CHECK(parse_error("vertices 2\nedge 0\n") == ErrorCode::ParseError);
    CHECK(parse_error("vertices 2\nedge 0 1x\n") == ErrorCode::ParseError);
}

TEST_CASE("coloring format") {
    Graph k2 = graphs::complete(2);
    TotalColoring f(3, {1, 2}, {3});
    const std::string text = io::format_coloring(k2, f);
    CHECK(text == "colors 3\nvcolor 0 1\nvcolor 1 2\necolor 0 1 3\n");
    CHECK(io::parse_coloring(text, k2) == f);
    CHECK(io::parse_coloring("colors 3\necolor 1 0 2\n", k2) == TotalColoring(3, {0, 0}, {2}));
    CHECK_THROWS_AS(io::parse_coloring("colors 3\nvcolor 5 1\n", k2), Error);
    CHECK_THROWS_AS(io::parse_coloring("colors 3\necolor 0 2 1\n", graphs::path(3)), Error);
    CHECK_THROWS_AS(io::parse_coloring("vcolor 0 1\n", k2), Error);
}

TEST_CASE("round trips on random graphs and colorings") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = oracle::random_connected(rng, 1 + trial % 9, 0.3);
        CHECK(io::parse_graph(io::format_graph(g)) == g);
        TotalColoring f = TotalColoring::for_graph(g, 7);
        std::uniform_int_distribution<int> col(0, 7);
        for (Vertex v = 0; v < g.vertex_count(); ++v) f.set_vertex(v, col(rng));
        for (EdgeId e = 0; e < g.edge_count(); ++e) f.set_edge(e, col(rng));
        CHECK(io::parse_coloring(io::format_coloring(g, f), g) == f);
    }
}

TEST_CASE("provenance sidecar") {
    Corona c = simple_corona(graphs::complete(2), graphs::complete(2));
    const std::string text = io::format_provenance(c);
    CHECK(text.find("vertex 0 origin center 0\n") != std::string::npos);
    CHECK(text.find("vertex 5 origin outer 1 1\n") != std::string::npos);
    CHECK(text.find("edge 0 1 class center\n") != std::string::npos);
    CHECK(text.find("edge 0 2 class fan 0\n") != std::string::npos);
    CHECK(text.find("edge 4 5 class copy 1\n") != std::string::npos);
}

TEST_CASE("dot export") {
    Graph k2 = graphs::complete(2);
    CHECK(io::format_dot(k2) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
    TotalColoring f(3, {1, 2}, {3});
    const std::string dot = io::format_dot(k2, &f);
    CHECK(dot.find("0 [label=\"0:1\"]") != std::string::npos);
    CHECK(dot.find("0 -- 1 [label=\"3\"]") != std::string::npos);
}

TEST_CASE("trace format") {
    ConstructionResult r = color_corona_auto(graphs::complete(2), graphs::complete(4));
    const std::string text = format_trace(r.trace);
    CHECK(text.rfind("step -1 complete base G 4\n", 0) == 0);
    for (const TraceStep& s : r.trace) {
        CHECK_FALSE(s.case_name.empty());
        CHECK(s.action.find(' ') == std::string::npos);
        CHECK(s.elements.find(' ') == std::string::npos);
        CHECK(s.colors.find(' ') == std::string::npos);
    }
}
