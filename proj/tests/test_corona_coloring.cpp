#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "avd/corona_coloring.hpp"
#include "avd/error.hpp"
#include "avd/exact_solver.hpp"
#include "oracles.hpp"

using namespace avd;

namespace {

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

TotalColoring base3(const Graph& g) { return base_avd_coloring(g, 3).coloring; }

/// Checks the certified result independently of the library verifier, then
/// the structural claims about centers and fans.
void check_result(const ConstructionResult& r, int t) {
    CHECK(r.report.ok());
    CHECK(r.certified());
    CHECK(r.t == t);
    CHECK(r.palette_bound == max_degree(r.corona.graph) + t);
    CHECK(r.colors_used() <= r.palette_bound);
    const auto p = oracle::plain(r.corona.graph);
    CHECK(oracle::avd(p, {r.coloring.vertex_colors(), r.coloring.edge_colors()}));

    const auto& prov = r.corona.provenance;
    for (int copy = 0; copy < prov.copy_count(); ++copy) {
        // Fan colors are distinct and none of them sits on the center.
        std::set<Color> fan;
        for (const Edge& e : fan_edges(prov, copy)) fan.insert(r.coloring.edge(*r.corona.graph.edge_id(e.u, e.v)));
        CHECK(fan.size() == static_cast<std::size_t>(prov.copy_size[static_cast<std::size_t>(copy)]));
        CHECK(fan.count(r.coloring.vertex(copy)) == 0);
        // Centers outrank their outer neighbors in degree.
        for (const Edge& e : fan_edges(prov, copy)) CHECK(r.corona.graph.degree(e.u) > r.corona.graph.degree(e.v));
    }
}

/// The last fan listing of each copy in the trace equals the fan colors in the result.
void check_trace_fans(const ConstructionResult& r) {
    const auto& prov = r.corona.provenance;
    std::map<int, std::string> last;
    for (const TraceStep& s : r.trace)
        if (s.action == "fan-fresh" || s.action == "cone-search") last[s.copy] = s.colors;
    for (int copy = 0; copy < prov.copy_count(); ++copy) {
        std::ostringstream want;
        bool first = true;
        for (const Edge& e : fan_edges(prov, copy)) {
            want << (first ? "" : ",") << r.coloring.edge(*r.corona.graph.edge_id(e.u, e.v));
            first = false;
        }
        CHECK(last[copy] == want.str());
    }
}

}  // namespace

TEST_CASE("realize_missing_colors examples") {
    Graph c4 = graphs::cycle(4);
    const std::vector<MissingColorTarget> targets{{0, 4}, {2, 5}};
    TotalColoring f = realize_missing_colors(c4, targets, 1, 5);
    CHECK(verify_avd(c4, f).ok());
    CHECK(missing_colors(c4, f, 0).contains(4));
    CHECK(missing_colors(c4, f, 2).contains(5));
    CHECK(f.vertex(0) != 1);
    CHECK(f.vertex(2) != 1);
    CHECK(used_colors(f).colors.to_vector().back() <= 5);

    // Already satisfied: the solver coloring comes back untouched.
    ColoringConstraints plain;
    plain.forbidden_vertex_colors[0] = {3};
    TotalColoring start = *find_constrained_avd_coloring(c4, 5, plain).coloring;
    const Color free_color = missing_colors(c4, start, 0).to_vector().front();
    const std::vector<MissingColorTarget> easy{{0, free_color}};
    std::vector<TraceStep> trace;
    CHECK(realize_missing_colors(c4, easy, 3, 5, &trace) == start);
    CHECK(trace.size() == 1);

    Graph k4 = graphs::complete(4);
    const std::vector<MissingColorTarget> adjacent{{0, 5}, {1, 6}};
    CHECK(code_of([&] { realize_missing_colors(k4, adjacent, 1, 6); }) == ErrorCode::HypothesisViolated);
    const std::vector<MissingColorTarget> off{{0, 9}};
    CHECK(code_of([&] { realize_missing_colors(k4, off, 1, 6); }) == ErrorCode::HypothesisViolated);
    const std::vector<MissingColorTarget> tight{{0, 4}};
    CHECK(code_of([&] { realize_missing_colors(k4, tight, 1, 4); }) == ErrorCode::Unrealizable);
}

TEST_CASE("realize_missing_colors audited on random instances") {
    std::mt19937 rng(808);
    int realized = 0;
    for (int trial = 0; trial < 80; ++trial) {
        Graph h = oracle::random_connected(rng, 3 + trial % 4, 0.3);
        auto indep = find_independent_set(h, 2);
        if (!indep) continue;
        const int d = max_degree(h);
        const int k = d + 3;
        const Color c = 1 + trial % k;
        const std::vector<MissingColorTarget> targets{{(*indep)[0], d + 2}, {(*indep)[1], d + 3}};
        TotalColoring f;
        try {
            f = realize_missing_colors(h, targets, c, k);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Unrealizable);
            continue;
        }
        ++realized;
        CHECK(oracle::avd(oracle::plain(h), {f.vertex_colors(), f.edge_colors()}));
        for (const auto& t : targets) {
            CHECK(f.vertex(t.vertex) != c);
            CHECK_FALSE(oracle::closed_set(oracle::plain(h), {f.vertex_colors(), f.edge_colors()}, t.vertex).count(t.color));
        }
        for (Color x : f.vertex_colors()) CHECK(x <= k);
        for (Color x : f.edge_colors()) CHECK(x <= k);
    }
    CHECK(realized > 20);
}

TEST_CASE("find_disjoint_missing_pair") {
    Graph k2 = graphs::complete(2);
    TotalColoring f(4, {1, 2}, {3});  // missing {2,4} and {1,4}
    CHECK(code_of([&] { find_disjoint_missing_pair(k2, f); }) == ErrorCode::NotFound);
    TotalColoring g(5, {1, 2}, {3});  // missing {2,4,5} and {1,4,5}
    CHECK(code_of([&] { find_disjoint_missing_pair(k2, g); }) == ErrorCode::NotFound);

    // Every avd 6-coloring of K_4: the pair exists whenever all six colors
    // are used; colorings leaving a color idle (all vertices miss it) have none.
    Graph k4 = graphs::complete(4);
    const auto p = oracle::plain(k4);
    int total = 0, without_pair = 0;
    oracle::first_total_coloring(p, 6, [&](const oracle::Colors& c) {
        if (!oracle::avd(p, c)) return false;
        ++total;
        TotalColoring t(6, c.v, c.e);
        try {
            auto [u, w] = find_disjoint_missing_pair(k4, t);
            CHECK(u < w);
            CHECK(missing_colors(k4, t, u).intersect(missing_colors(k4, t, w)).empty());
            for (Vertex x = 0; x < 4; ++x)
                for (Vertex y = x + 1; y < 4; ++y)
                    if (std::make_pair(x, y) < std::make_pair(u, w))
                        CHECK_FALSE(missing_colors(k4, t, x).intersect(missing_colors(k4, t, y)).empty());
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotFound);
            CHECK(used_colors(t).count < 6);
            ++without_pair;
        }
        return false;
    });
    CHECK(total == 43200);
    CHECK(without_pair == 4320);
}

TEST_CASE("find_diffk_vertices") {
    Graph k24 = graphs::complete_bipartite(2, 4);
    auto u = find_diffk_vertices(k24, 3);
    REQUIRE(u.has_value());
    CHECK(is_independent(k24, *u));
    CHECK_FALSE(find_diffk_vertices(graphs::complete(5), 3).has_value());
}

TEST_CASE("generalized corona examples") {
    Graph c4 = graphs::cycle(4);
    BaseColoring base = base_avd_coloring(c4, 2);
    CHECK(base.t == 2);
    const std::vector<Graph> fig{graphs::cycle(3), graphs::path(3), graphs::path(4), graphs::path(2)};
    ConstructionResult r = color_generalized_corona(c4, base.coloring, fig, 2);
    check_result(r, 2);
    check_trace_fans(r);
    CHECK(r.colors_used() <= 8);

    Graph k2 = graphs::complete(2);
    base = base_avd_coloring(k2, 2);
    const std::vector<Graph> twice{k2, k2};
    r = color_generalized_corona(k2, base.coloring, twice, 2);
    check_result(r, 2);
    CHECK(r.colors_used() <= 5);

    const std::vector<Graph> too_big{graphs::cycle(3), graphs::star(3), graphs::path(2), graphs::path(2)};
    CHECK(code_of([&] { color_generalized_corona(c4, base_avd_coloring(c4, 2).coloring, too_big, 2); }) ==
          ErrorCode::HypothesisViolated);
    CHECK(code_of([&] { color_generalized_corona(c4, TotalColoring::for_graph(c4, 4), fig, 2); }) ==
          ErrorCode::BaseColoringInvalid);
    CHECK(code_of([&] { color_generalized_corona(c4, base_avd_coloring(c4, 2).coloring, fig, 1); }) ==
          ErrorCode::HypothesisViolated);
}

TEST_CASE("generalized corona with a larger copy at a low-degree center") {
    Graph p4 = graphs::path(4);
    const std::vector<Graph> hs{graphs::cycle(4), graphs::path(2), graphs::path(2), graphs::cycle(4)};
    BaseColoring base = base_avd_coloring(p4, 2);
    ConstructionResult r = color_generalized_corona(p4, base.coloring, hs, base.t);
    check_result(r, base.t);
    check_trace_fans(r);
}

TEST_CASE("Delta-difference constructions") {
    const Graph k2 = graphs::complete(2), p3 = graphs::path(3), c4 = graphs::cycle(4);
    check_result(color_corona_diff1(p3, base3(p3), graphs::complete(4)), 3);
    check_result(color_corona_diff1(c4, base3(c4), graphs::star(3)), 3);
    ConstructionResult r = color_corona_diff1(k2, base3(k2), c4);
    check_result(r, 3);
    CHECK(r.colors_used() <= 8);

    r = color_corona_complete(k2, base3(k2), graphs::complete(4));
    check_result(r, 3);
    CHECK(r.colors_used() <= 8);
    check_result(color_corona_complete(p3, base3(p3), graphs::complete(5)), 3);
    CHECK(code_of([&] { color_corona_complete(k2, base3(k2), graphs::complete(3)); }) == ErrorCode::HypothesisViolated);

    check_result(color_corona_diff2(k2, base3(k2), graphs::complete_minus_edge(4)), 3);
    check_result(color_corona_diff2(k2, base3(k2), graphs::star(3)), 3);
    check_result(color_corona_diff2(k2, base3(k2), graphs::petersen()), 3);
    CHECK(code_of([&] { color_corona_diff2(p3, base3(p3), graphs::complete(4)); }) == ErrorCode::HypothesisViolated);

    r = color_corona_bip3(k2, base3(k2), graphs::complete_bipartite(2, 4));
    check_result(r, 3);
    CHECK(r.colors_used() <= 10);
    r = color_corona_bip3(k2, base3(k2), graphs::star(4));
    check_result(r, 3);
    CHECK(r.colors_used() <= 9);
    CHECK(code_of([&] { color_corona_bip3(k2, base3(k2), graphs::complete(5)); }) == ErrorCode::HypothesisViolated);

    r = color_corona_diffk(k2, base3(k2), graphs::complete_bipartite(2, 4), 3);
    check_result(r, 3);
    CHECK(r.colors_used() <= 10);
    CHECK(code_of([&] { color_corona_diffk(k2, base3(k2), graphs::star(3), 3); }) == ErrorCode::HypothesisViolated);
    CHECK(code_of([&] { color_corona_diffk(k2, base3(k2), graphs::complete_minus_edge(5), 3); }) ==
          ErrorCode::HypothesisViolated);
    CHECK(code_of([&] { color_corona_diffk(k2, base3(k2), graphs::complete_bipartite(2, 4), 2); }) ==
          ErrorCode::HypothesisViolated);
}

TEST_CASE("hypothesis errors name the hypothesis") {
    try {
        color_corona_diff2(graphs::path(3), base3(graphs::path(3)), graphs::complete(4));
        FAIL("expected HypothesisViolated");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("Delta(H) = Delta(G)+2") != std::string::npos);
    }
}

TEST_CASE("audits") {
    auto find = [](const std::vector<TheoremAudit>& audits, TheoremKind kind) {
        for (const auto& a : audits)
            if (a.tag.kind == kind) return a;
        FAIL("missing tag");
        return audits.front();
    };
    auto a = applicable_theorems(graphs::cycle(4), graphs::complete(2));
    CHECK(find(a, TheoremKind::GenCorona).applicable());

    a = applicable_theorems(graphs::complete(2), graphs::complete(4));
    CHECK_FALSE(find(a, TheoremKind::Diff1).applicable());
    CHECK(find(a, TheoremKind::CompleteH).applicable());
    CHECK_FALSE(find(a, TheoremKind::Diff2).applicable());

    a = applicable_theorems(graphs::complete(2), graphs::complete_bipartite(2, 4));
    CHECK(find(a, TheoremKind::Bip3).applicable());
    CHECK(find(a, TheoremKind::DiffK).applicable());
    CHECK(find(a, TheoremKind::DiffK).tag.k == 3);
    CHECK(format_audit(a).find("bip3\tapplicable") != std::string::npos);
}

TEST_CASE("auto dispatch") {
    ConstructionResult r = color_corona_auto(graphs::cycle(4), graphs::complete(2));
    CHECK(r.theorem.kind == TheoremKind::GenCorona);
    CHECK(r.t == 2);
    check_result(r, 2);

    r = color_corona_auto(graphs::complete(2), graphs::complete(4));
    CHECK(r.theorem.kind == TheoremKind::CompleteH);
    check_result(r, 3);

    r = color_corona_auto(graphs::complete(2), graphs::petersen());
    CHECK(r.theorem.kind == TheoremKind::Diff2);
    check_result(r, 3);

    CHECK(code_of([] { color_corona_auto(graphs::complete(2), graphs::complete(5)); }) == ErrorCode::NoApplicableTheorem);
    CHECK(color_corona_auto(graphs::complete(2), graphs::complete(4)).coloring ==
          color_corona_auto(graphs::complete(2), graphs::complete(4)).coloring);
}

TEST_CASE("random generalized coronas certify") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracle::random_connected(rng, 2 + trial % 4, 0.4);
        const int dg = max_degree(g);
        std::vector<Graph> hs;
        for (int i = 0; i < g.vertex_count(); ++i) {
            Graph h = graphs::complete(2);
            for (int attempt = 0; attempt < 50; ++attempt) {
                Graph cand = oracle::random_connected(rng, 2 + (trial + i) % 4, 0.3);
                if (max_degree(cand) <= dg) {
                    h = cand;
                    break;
                }
            }
            hs.push_back(h);
        }
        ConstructionResult r = color_corona_auto(g, hs);
        CAPTURE(trial);
        check_result(r, r.t);
        check_trace_fans(r);
    }
}
