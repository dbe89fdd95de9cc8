#include "avd/corona_coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "avd/bipartite_coloring.hpp"
#include "avd/error.hpp"
#include "avd/exact_solver.hpp"

namespace avd {

namespace {

constexpr std::int64_t kCase2AttemptNodes = 1'000'000;
constexpr std::int64_t kRepairNodes = 5'000'000;

std::string join(const std::vector<int>& xs, const std::string& prefix = "") {
    if (xs.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << prefix << xs[i];
    return os.str();
}

std::string colors_str(const ColorSet& s) { return join(s.to_vector()); }

TraceStep step(std::string case_name, std::string action, std::string elements, std::string colors) {
    return TraceStep{-1, std::move(case_name), std::move(action), std::move(elements), std::move(colors)};
}

[[noreturn]] void violated(const std::string& hypothesis, const std::string& detail) {
    throw Error(ErrorCode::HypothesisViolated, hypothesis + " (" + detail + ")");
}

void require(bool cond, const std::string& hypothesis, const std::string& detail) {
    if (!cond) violated(hypothesis, detail);
}

void require_connected_nontrivial(const Graph& g, const std::string& which) {
    require(g.vertex_count() >= 2, which + " has at least two vertices", "n = " + std::to_string(g.vertex_count()));
    require(is_connected(g), which + " is connected", "disconnected");
}

void check_base(const Graph& g, const TotalColoring& f_g, int palette) {
    if (!f_g.matches(g) || !f_g.is_complete())
        throw Error(ErrorCode::BaseColoringInvalid, "base coloring does not cover G");
    VerificationReport r = verify_avd(g, f_g);
    if (!r.ok()) throw Error(ErrorCode::BaseColoringInvalid, "base coloring is not avd:\n" + r.describe(g));
    UsedColors u = used_colors(f_g);
    auto colors = u.colors.to_vector();
    if (!colors.empty() && colors.back() > palette)
        throw Error(ErrorCode::BaseColoringInvalid,
                    "base coloring uses color " + std::to_string(colors.back()) + " above " + std::to_string(palette));
}

/// Coloring of one copy of an outer graph plus the colors of its fan,
/// indexed by outer vertex id.
struct CopyPlan {
    TotalColoring outer;
    std::vector<Color> fan;
    std::vector<TraceStep> steps;
};

void fill_fresh(std::vector<Color>& fan, Color first) {
    for (Color& c : fan)
        if (c == 0) c = first++;
}

std::vector<Vertex> recolor_vertices(TotalColoring& f, Color from, Color to) {
    std::vector<Vertex> changed;
    for (Vertex x = 0; x < f.vertex_count(); ++x)
        if (f.vertex(x) == from) {
            f.set_vertex(x, to);
            changed.push_back(x);
        }
    return changed;
}

class Assembly {
public:
    Assembly(Corona corona, int bound) : corona_(std::move(corona)), f_(TotalColoring::for_graph(corona_.graph, bound)) {}

    const Corona& corona() const { return corona_; }

    void place_center(const Graph& g, const TotalColoring& f_g) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) f_.set_vertex(v, f_g.vertex(v));
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            f_.set_edge(*corona_.graph.edge_id(g.edge(e).u, g.edge(e).v), f_g.edge(e));
    }

    void place_copy(int copy, const Graph& h, const CopyPlan& plan, std::vector<TraceStep>& trace) {
        const auto& prov = corona_.provenance;
        for (Vertex x = 0; x < h.vertex_count(); ++x) {
            f_.set_vertex(prov.corona_vertex(copy, x), plan.outer.vertex(x));
            f_.set_edge(*corona_.graph.edge_id(copy, prov.corona_vertex(copy, x)),
                        plan.fan[static_cast<std::size_t>(x)]);
        }
        for (EdgeId e = 0; e < h.edge_count(); ++e) {
            const Edge& ed = h.edge(e);
            f_.set_edge(*corona_.graph.edge_id(prov.corona_vertex(copy, ed.u), prov.corona_vertex(copy, ed.v)),
                        plan.outer.edge(e));
        }
        for (TraceStep s : plan.steps) {
            s.copy = copy;
            trace.push_back(std::move(s));
        }
    }

    ConstructionResult finish(TheoremTag tag, int t, std::vector<TraceStep> trace) && {
        ConstructionResult r;
        r.theorem = tag;
        r.t = t;
        r.palette_bound = f_.palette();
        r.report = verify_avd(corona_.graph, f_);
        r.coloring = std::move(f_);
        r.corona = std::move(corona_);
        r.trace = std::move(trace);
        return r;
    }

private:
    Corona corona_;
    TotalColoring f_;
};

std::vector<Color> center_edge_colors(const Graph& g, const TotalColoring& f_g, Vertex v) {
    std::vector<Color> out;
    for (const auto& inc : g.incidences(v)) out.push_back(f_g.edge(inc.edge));
    return out;
}

std::string fan_elements(const std::vector<Vertex>& xs) { return join(xs, "vu"); }

/// Recolors copy `copy` and its fan by exact search on the cone H + apex,
/// keeping the apex's color and the colors of its G-edges out of the cone.
std::optional<CopyPlan> cone_repair(const Graph& h, Color center_color, const std::vector<Color>& g_edge_colors,
                                    const std::set<Color>& kept_out, int palette) {
    const int n = h.vertex_count();
    std::vector<std::pair<int, int>> pairs;
    for (const Edge& e : h.edges()) pairs.emplace_back(e.u, e.v);
    for (Vertex x = 0; x < n; ++x) pairs.emplace_back(x, n);
    Graph cone = build_graph(n + 1, pairs);

    ColoringConstraints cons;
    cons.fixed_vertices[n] = center_color;
    for (Color c : g_edge_colors) cons.required_missing[n].insert(c);
    for (Color c : kept_out) cons.required_missing[n].insert(c);
    if (palette > 63) return std::nullopt;
    SearchResult r = find_constrained_avd_coloring(cone, palette, cons, SearchBudget{kRepairNodes});
    if (!r.found()) return std::nullopt;

    CopyPlan plan;
    plan.outer = TotalColoring::for_graph(h, palette);
    plan.fan.assign(static_cast<std::size_t>(n), 0);
    for (Vertex x = 0; x < n; ++x) {
        plan.outer.set_vertex(x, r.coloring->vertex(x));
        plan.fan[static_cast<std::size_t>(x)] = r.coloring->edge(*cone.edge_id(x, n));
    }
    for (EdgeId e = 0; e < h.edge_count(); ++e)
        plan.outer.set_edge(e, r.coloring->edge(*cone.edge_id(h.edge(e).u, h.edge(e).v)));
    return plan;
}

ColorSet closed_colors(const Graph& h, const TotalColoring& f, Vertex x, Color fan_color) {
    ColorSet s = color_set(h, f, x);
    s.insert(fan_color);
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string TheoremTag::name() const {
    switch (kind) {
        case TheoremKind::GenCorona: return "gen";
        case TheoremKind::Diff1: return "diff1";
        case TheoremKind::CompleteH: return "complete";
        case TheoremKind::Diff2: return "diff2";
        case TheoremKind::Bip3: return "bip3";
        case TheoremKind::DiffK: return "diffk(" + std::to_string(k) + ")";
    }
    return "unknown";
}

std::string format_trace(const std::vector<TraceStep>& trace) {
    std::ostringstream os;
    for (const TraceStep& s : trace)
        os << "step " << s.copy << ' ' << s.case_name << ' ' << s.action << ' ' << s.elements << ' ' << s.colors << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// Prescribed missing colors

namespace {

bool targets_hold(const Graph& h, const TotalColoring& f, std::span<const MissingColorTarget> targets, std::size_t upto,
                  Color forbidden) {
    for (std::size_t j = 0; j < upto; ++j) {
        if (f.vertex(targets[j].vertex) == forbidden) return false;
        if (color_set(h, f, targets[j].vertex).contains(targets[j].color)) return false;
    }
    return true;
}

std::optional<TotalColoring> swap_schedule(const Graph& h, const TotalColoring& f,
                                           std::span<const MissingColorTarget> targets, std::size_t i, Color forbidden,
                                           std::vector<TraceStep>& steps) {
    if (i == targets.size())
        return targets_hold(h, f, targets, targets.size(), forbidden) ? std::optional<TotalColoring>(f) : std::nullopt;
    const auto [u, want] = targets[i];
    ColorSet missing = missing_colors(h, f, u);
    if (missing.contains(want)) return swap_schedule(h, f, targets, i + 1, forbidden, steps);
    for (Color a : missing.to_vector()) {
        bool secured = std::any_of(targets.begin(), targets.begin() + static_cast<std::ptrdiff_t>(i),
                                   [a](const MissingColorTarget& t) { return t.color == a; });
        if (secured) continue;
        TotalColoring next = swap_color_classes(f, a, want);
        // Exchanges may drag a target vertex onto the forbidden color; such
        // schedules are dropped and the next missing color is tried.
        if (!targets_hold(h, next, targets, i + 1, forbidden)) continue;
        steps.push_back(step("missing", "swap", "u" + std::to_string(u), std::to_string(a) + "," + std::to_string(want)));
        if (auto done = swap_schedule(h, next, targets, i + 1, forbidden, steps)) return done;
        steps.pop_back();
    }
    return std::nullopt;
}

}  // namespace

TotalColoring realize_missing_colors(const Graph& h, std::span<const MissingColorTarget> targets, Color forbidden,
                                     int k, std::vector<TraceStep>* trace) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const auto& t = targets[i];
        if (!h.has_vertex(t.vertex)) throw Error(ErrorCode::BadVertex, "target " + std::to_string(t.vertex));
        require(t.color >= 1 && t.color <= k, "target color within palette", "color " + std::to_string(t.color));
        for (std::size_t j = 0; j < i; ++j) {
            require(targets[j].vertex != t.vertex, "targets are distinct", "vertex " + std::to_string(t.vertex));
            require(!h.adjacent(targets[j].vertex, t.vertex), "targets pairwise non-adjacent",
                    std::to_string(targets[j].vertex) + "-" + std::to_string(t.vertex) + " is an edge");
            require(targets[j].color != t.color, "target colors distinct", "color " + std::to_string(t.color));
        }
    }

    std::vector<TraceStep> steps;
    ColoringConstraints start;
    for (const auto& t : targets)
        if (forbidden >= 1 && forbidden <= k) start.forbidden_vertex_colors[t.vertex].insert(forbidden);
    SearchResult initial = find_constrained_avd_coloring(h, k, start);
    if (initial.found()) {
        steps.push_back(step("missing", "initial", "-", std::to_string(k)));
        if (auto done = swap_schedule(h, *initial.coloring, targets, 0, forbidden, steps)) {
            if (trace) trace->insert(trace->end(), steps.begin(), steps.end());
            return *done;
        }
        steps.clear();
    }

    ColoringConstraints direct = start;
    for (const auto& t : targets) direct.required_missing[t.vertex].insert(t.color);
    SearchResult r = find_constrained_avd_coloring(h, k, direct);
    if (!r.found())
        throw Error(ErrorCode::Unrealizable, std::string("no avd ") + std::to_string(k) + "-coloring meets the targets (" +
                                                 (r.status == SearchStatus::Exhausted ? "budget exhausted" : "unsatisfiable") +
                                                 ")");
    if (trace) trace->push_back(step("missing", "constrained-search", "-", std::to_string(k)));
    return *r.coloring;
}

std::pair<Vertex, Vertex> find_disjoint_missing_pair(const Graph& h, const TotalColoring& f) {
    std::vector<ColorSet> missing;
    for (Vertex v = 0; v < h.vertex_count(); ++v) missing.push_back(missing_colors(h, f, v));
    for (Vertex u = 0; u < h.vertex_count(); ++u)
        for (Vertex w = u + 1; w < h.vertex_count(); ++w)
            if (missing[static_cast<std::size_t>(u)].intersect(missing[static_cast<std::size_t>(w)]).empty()) return {u, w};
    throw Error(ErrorCode::NotFound, "no two vertices with disjoint missing colors");
}

std::optional<std::vector<Vertex>> find_diffk_vertices(const Graph& h, int k) {
    if (k < 1) return std::nullopt;
    const int delta = max_degree(h);
    // Threshold per position i = 1..k; positions outside {3..k-2} are only bound by Delta.
    std::vector<int> threshold(static_cast<std::size_t>(k), delta);
    for (int i = 3; i <= k - 2; ++i) threshold[static_cast<std::size_t>(i - 1)] = delta - i + 2;
    std::vector<int> positions(static_cast<std::size_t>(k));
    std::iota(positions.begin(), positions.end(), 0);
    std::stable_sort(positions.begin(), positions.end(), [&](int a, int b) {
        return threshold[static_cast<std::size_t>(a)] > threshold[static_cast<std::size_t>(b)];
    });

    auto order = [&](std::vector<Vertex> set) -> std::optional<std::vector<Vertex>> {
        std::stable_sort(set.begin(), set.end(), [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
        std::vector<Vertex> out(static_cast<std::size_t>(k));
        for (std::size_t r = 0; r < set.size(); ++r) {
            const auto pos = static_cast<std::size_t>(positions[r]);
            if (h.degree(set[r]) > threshold[pos]) return std::nullopt;
            out[pos] = set[r];
        }
        return out;
    };

    std::vector<Vertex> chosen;
    std::optional<std::vector<Vertex>> found;
    auto dfs = [&](auto&& self, Vertex next) -> bool {
        if (static_cast<int>(chosen.size()) == k) {
            found = order(chosen);
            return found.has_value();
        }
        for (Vertex v = next; v < h.vertex_count(); ++v) {
            if (h.vertex_count() - v < k - static_cast<int>(chosen.size())) return false;
            if (std::any_of(chosen.begin(), chosen.end(), [&](Vertex u) { return h.adjacent(u, v); })) continue;
            chosen.push_back(v);
            if (self(self, v + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    dfs(dfs, 0);
    return found;
}

// ---------------------------------------------------------------------------
// Generalized corona, Delta(G) >= Delta(H_i)

ConstructionResult color_generalized_corona(const Graph& g, const TotalColoring& f_g, std::span<const Graph> hs, int t) {
    if (static_cast<int>(hs.size()) != g.vertex_count())
        throw Error(ErrorCode::LengthMismatch, "one outer graph per center vertex required");
    require(t >= 2, "t >= 2", "t = " + std::to_string(t));
    require_connected_nontrivial(g, "G");
    const int dg = max_degree(g);
    for (std::size_t i = 0; i < hs.size(); ++i) {
        require_connected_nontrivial(hs[i], "H_" + std::to_string(i));
        require(max_degree(hs[i]) <= dg, "Delta(G) >= Delta(H_i)",
                "Delta(H_" + std::to_string(i) + ") = " + std::to_string(max_degree(hs[i])) + " > " + std::to_string(dg));
    }
    check_base(g, f_g, dg + t);

    Corona corona = generalized_corona(g, hs);
    const int bound = max_degree(corona.graph) + t;
    Assembly out(std::move(corona), bound);
    out.place_center(g, f_g);
    std::vector<TraceStep> trace;
    trace.push_back(step("gen", "base", "G", std::to_string(dg + t)));

    std::vector<CopyPlan> plans;
    for (int i = 0; i < g.vertex_count(); ++i) {
        const Graph& h = hs[static_cast<std::size_t>(i)];
        const int n = h.vertex_count();
        const int dh = max_degree(h);
        const Color c = f_g.vertex(i);
        const Color fresh = dg + t + 1;
        ChromaticResult total = exact_total_chromatic_with_witness(h);
        const int ti = std::max(1, total.value - dh);
        require(ti <= t, "chi''(H_i) <= Delta(H_i)+t",
                "chi''(H_" + std::to_string(i) + ") = " + std::to_string(total.value));

        CopyPlan plan;
        plan.fan.assign(static_cast<std::size_t>(n), 0);
        if (dg > dh || ti < t) {
            // Case 1: shift the palette past c so c is used nowhere in the copy.
            plan.outer = total.coloring;
            auto shift = [c](Color x) { return x >= c ? x + 1 : x; };
            for (Vertex x = 0; x < n; ++x) plan.outer.set_vertex(x, shift(plan.outer.vertex(x)));
            for (EdgeId e = 0; e < h.edge_count(); ++e) plan.outer.set_edge(e, shift(plan.outer.edge(e)));
            plan.outer.set_palette(dh + ti + 1);
            plan.steps.push_back(step("gen.case1", "color-copy-avoiding", "H", std::to_string(c)));
            fill_fresh(plan.fan, fresh);
            plan.steps.push_back(step("gen.case1", "fan-fresh", "-", join(plan.fan)));
        } else {
            // Case 2: Delta(H_i) = Delta(G) and t_i = t.
            ColoringConstraints avoid;
            for (Vertex x = 0; x < n; ++x) avoid.forbidden_vertex_colors[x] = {c};
            SearchResult attempt = find_constrained_coloring(h, dh + t, SearchMode::ProperTotal, avoid,
                                                             SearchBudget{kCase2AttemptNodes});
            if (attempt.found()) {
                plan.outer = *attempt.coloring;
                plan.steps.push_back(step("gen.case2", "color-copy-vertices-avoiding", "H", std::to_string(c)));
                fill_fresh(plan.fan, fresh);
                plan.steps.push_back(step("gen.case2", "fan-fresh", "-", join(plan.fan)));
            } else {
                plan.outer = total.coloring;
                plan.outer.set_palette(dh + t);
                auto changed = recolor_vertices(plan.outer, c, fresh);
                plan.steps.push_back(step("gen.case2", "recolor", join(changed, "u"), std::to_string(c) + "," + std::to_string(fresh)));
                Vertex routed = -1;
                for (Vertex x = 0; x < n && routed < 0; ++x)
                    if (plan.outer.vertex(x) != fresh) routed = x;
                if (routed < 0) throw Error(ErrorCode::Unrealizable, "every vertex of H_i was recolored");
                plan.fan[static_cast<std::size_t>(routed)] = fresh;
                plan.steps.push_back(step("gen.case2", "route", fan_elements({routed}), std::to_string(fresh)));
                fill_fresh(plan.fan, fresh + 1);
                plan.steps.push_back(step("gen.case2", "fan-fresh", "-", join(plan.fan)));
            }
        }

        plans.push_back(std::move(plan));
    }

    // A center of less than maximum degree can carry a fan whose fresh colors
    // run past Delta(corona)+t. Such copies are recolored by exact search on
    // the cone H_i + v_i, keeping v_i's set apart from its G-neighbors' sets.
    auto center_set = [&](int j) {
        std::set<Color> s;
        s.insert(f_g.vertex(j));
        for (Color x : center_edge_colors(g, f_g, j)) s.insert(x);
        for (Color x : plans[static_cast<std::size_t>(j)].fan) s.insert(x);
        return s;
    };
    for (int i = 0; i < g.vertex_count(); ++i) {
        CopyPlan& plan = plans[static_cast<std::size_t>(i)];
        if (*std::max_element(plan.fan.begin(), plan.fan.end()) <= bound) continue;
        const Graph& h = hs[static_cast<std::size_t>(i)];
        const auto g_edges = center_edge_colors(g, f_g, i);
        std::set<Color> kept_out;
        bool done = false;
        for (int round = 0; round <= g.degree(i) && !done; ++round) {
            auto repaired = cone_repair(h, f_g.vertex(i), g_edges, kept_out, bound);
            if (!repaired) break;
            std::vector<TraceStep> steps = plan.steps;
            CopyPlan before = std::exchange(plan, std::move(*repaired));
            plan.steps = std::move(steps);
            const auto mine = center_set(i);
            std::optional<Color> extra;
            for (const auto& inc : g.incidences(i)) {
                const auto theirs = center_set(inc.neighbor);
                if (theirs != mine) continue;
                // Keep one of the neighbor's colors off this center.
                for (Color x : theirs)
                    if (x != f_g.vertex(i) && std::find(g_edges.begin(), g_edges.end(), x) == g_edges.end() &&
                        !kept_out.count(x)) {
                        extra = x;
                        break;
                    }
                break;
            }
            if (!extra) {
                done = true;
                plan.steps.push_back(step("gen.repair", "cone-search", "H,fan", join(plan.fan)));
            } else {
                kept_out.insert(*extra);
                plan.steps.push_back(step("gen.repair", "keep-out", "v", std::to_string(*extra)));
                before.steps = std::move(plan.steps);
                plan = std::move(before);
            }
        }
        if (!done) plan.steps.push_back(step("gen.repair", "cone-search-failed", "H,fan", std::to_string(bound)));
    }
    for (int i = 0; i < g.vertex_count(); ++i)
        out.place_copy(i, hs[static_cast<std::size_t>(i)], plans[static_cast<std::size_t>(i)], trace);
    return std::move(out).finish(TheoremTag{TheoremKind::GenCorona}, t, std::move(trace));
}

// ---------------------------------------------------------------------------
// Simple coronas with Delta(H) > Delta(G)

namespace {

/// Shared driver for the simple-corona theorems: checks G, builds G o H,
/// places f_g and fills every copy with plan_for(c), memoized by c.
template <typename PlanFor>
ConstructionResult assemble_simple(TheoremTag tag, const Graph& g, const TotalColoring& f_g, const Graph& h,
                                   PlanFor&& plan_for) {
    Corona corona = simple_corona(g, h);
    const int bound = max_degree(corona.graph) + 3;
    Assembly out(std::move(corona), bound);
    out.place_center(g, f_g);
    std::vector<TraceStep> trace;
    trace.push_back(step(tag.name(), "base", "G", std::to_string(max_degree(g) + 3)));
    std::map<Color, CopyPlan> memo;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const Color c = f_g.vertex(v);
        auto it = memo.find(c);
        if (it == memo.end()) it = memo.emplace(c, plan_for(c)).first;
        out.place_copy(v, h, it->second, trace);
    }
    return std::move(out).finish(tag, 3, std::move(trace));
}

void require_simple_common(const Graph& g, const TotalColoring& f_g, const Graph& h) {
    require_connected_nontrivial(g, "G");
    require_connected_nontrivial(h, "H");
    check_base(g, f_g, max_degree(g) + 3);
}

}  // namespace

ConstructionResult color_corona_diff1(const Graph& g, const TotalColoring& f_g, const Graph& h) {
    require_simple_common(g, f_g, h);
    const int dg = max_degree(g);
    require(max_degree(h) == dg + 1, "Delta(H) = Delta(G)+1",
            "Delta(H) = " + std::to_string(max_degree(h)) + ", Delta(G) = " + std::to_string(dg));
    const bool bipartite = bipartition(h).is_bipartite();
    const int n = h.vertex_count();

    return assemble_simple(TheoremTag{TheoremKind::Diff1}, g, f_g, h, [&](Color c) {
        CopyPlan plan;
        plan.fan.assign(static_cast<std::size_t>(n), 0);
        if (bipartite) {
            // (Delta(H)+2)-coloring with c on edges only, so no vertex clashes with the center.
            plan.outer = bipartite_avd_coloring(h, std::optional<Color>(c), dg + 3);
            plan.steps.push_back(step("diff1.bipartite", "konig-copy", "H", std::to_string(c)));
            fill_fresh(plan.fan, dg + 4);
            plan.steps.push_back(step("diff1.bipartite", "fan-fresh", "-", join(plan.fan)));
            return plan;
        }
        const Color a = dg + 4, b = dg + 5;
        Vertex u = -1;
        for (Vertex x = 0; x < n && u < 0; ++x) {
            try {
                std::vector<TraceStep> local;
                const MissingColorTarget target{x, a};
                plan.outer = realize_missing_colors(h, std::span<const MissingColorTarget>(&target, 1), c, a, &local);
                plan.steps = std::move(local);
                u = x;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::Unrealizable) throw;
            }
        }
        if (u < 0) throw Error(ErrorCode::Unrealizable, "no vertex u with f(u) != c and Delta(G)+4 missing");
        plan.fan[static_cast<std::size_t>(u)] = a;
        plan.steps.push_back(step("diff1", "fan", fan_elements({u}), std::to_string(a)));
        auto changed = recolor_vertices(plan.outer, c, b);
        plan.outer.set_palette(b);
        if (!changed.empty()) {
            plan.steps.push_back(step("diff1", "recolor", join(changed, "u"), std::to_string(c) + "," + std::to_string(b)));
            Vertex w = -1;
            for (Vertex x = 0; x < n && w < 0; ++x)
                if (x != u && plan.outer.vertex(x) != b) w = x;
            if (w < 0) throw Error(ErrorCode::Unrealizable, "no vertex w != u left uncolored by Delta(G)+5");
            plan.fan[static_cast<std::size_t>(w)] = b;
            plan.steps.push_back(step("diff1", "route", fan_elements({w}), std::to_string(b)));
            fill_fresh(plan.fan, dg + 6);
        } else {
            fill_fresh(plan.fan, dg + 5);
        }
        plan.steps.push_back(step("diff1", "fan-fresh", "-", join(plan.fan)));
        return plan;
    });
}

ConstructionResult color_corona_complete(const Graph& g, const TotalColoring& f_g, const Graph& h) {
    require_simple_common(g, f_g, h);
    const int dg = max_degree(g);
    require(is_complete(h), "H is complete", "missing edges");
    require(h.vertex_count() == dg + 3, "n_H = Delta(G)+3",
            "n_H = " + std::to_string(h.vertex_count()) + ", Delta(G)+3 = " + std::to_string(dg + 3));
    const int n = h.vertex_count();
    const Color a = dg + 4, b = dg + 5;

    return assemble_simple(TheoremTag{TheoremKind::CompleteH}, g, f_g, h, [&](Color c) {
        CopyPlan plan;
        plan.fan.assign(static_cast<std::size_t>(n), 0);
        ColoringConstraints cons;
        for (Vertex x = 0; x < n; ++x) cons.forbidden_vertex_colors[x] = {c, b};
        SearchResult base = find_constrained_avd_coloring(h, b, cons);
        if (!base.found()) throw Error(ErrorCode::Unrealizable, "no avd coloring of K_n with vertex colors avoiding c");
        // After the fans are added, u and w must still be told apart.
        auto audit = [&](const TotalColoring& f, Vertex u, Vertex w) {
            for (Vertex x = 0; x < n; ++x)
                if (f.vertex(x) == c) return false;
            return missing_colors(h, f, u).contains(a) && missing_colors(h, f, w).contains(b) &&
                   closed_colors(h, f, u, a) != closed_colors(h, f, w, b);
        };
        std::optional<TotalColoring> chosen;
        Vertex u = -1, w = -1;
        const TotalColoring& f0 = *base.coloring;
        std::optional<std::pair<Vertex, Vertex>> pair;
        try {
            pair = find_disjoint_missing_pair(h, f0);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotFound) throw;
        }
        if (pair) {
            std::tie(u, w) = *pair;
            plan.steps.push_back(step("complete", "pair", "u" + std::to_string(u) + ",u" + std::to_string(w),
                                      colors_str(missing_colors(h, f0, u)) + "|" + colors_str(missing_colors(h, f0, w))));
            std::vector<Color> first_options =
                missing_colors(h, f0, u).contains(a) ? std::vector<Color>{a} : missing_colors(h, f0, u).to_vector();
            for (Color x : first_options) {
                TotalColoring f1 = x == a ? f0 : swap_color_classes(f0, x, a);
                std::vector<Color> second_options =
                    missing_colors(h, f1, w).contains(b) ? std::vector<Color>{b} : missing_colors(h, f1, w).to_vector();
                for (Color y : second_options) {
                    if (y == a) continue;
                    TotalColoring f2 = y == b ? f1 : swap_color_classes(f1, y, b);
                    if (!audit(f2, u, w)) continue;
                    if (x != a) plan.steps.push_back(step("complete", "swap", "u" + std::to_string(u), std::to_string(x) + "," + std::to_string(a)));
                    if (y != b) plan.steps.push_back(step("complete", "swap", "u" + std::to_string(w), std::to_string(y) + "," + std::to_string(b)));
                    chosen = std::move(f2);
                    break;
                }
                if (chosen) break;
            }
        }
        if (!chosen) {
            // The solver's coloring has no usable pair: search directly for
            // missing sets {a, x} at u and {b, y} at w with x != y.
            for (Vertex su = 0; su < n && !chosen; ++su)
                for (Vertex sw = su + 1; sw < n && !chosen; ++sw)
                    for (Color x = 1; x <= b && !chosen; ++x)
                        for (Color y = 1; y <= b && !chosen; ++y) {
                            if (x == a || x == b || y == a || y == b || x == y) continue;
                            ColoringConstraints direct;
                            for (Vertex v = 0; v < n; ++v) direct.forbidden_vertex_colors[v] = {c};
                            direct.required_missing[su] = {a, x};
                            direct.required_missing[sw] = {b, y};
                            SearchResult r = find_constrained_avd_coloring(h, b, direct, SearchBudget{kCase2AttemptNodes});
                            if (!r.found() || !audit(*r.coloring, su, sw)) continue;
                            u = su;
                            w = sw;
                            plan.steps.push_back(step("complete", "constrained-search", "u" + std::to_string(u) + ",u" + std::to_string(w),
                                                      std::to_string(a) + "," + std::to_string(x) + "|" + std::to_string(b) + "," + std::to_string(y)));
                            chosen = std::move(*r.coloring);
                        }
        }
        if (!chosen) throw Error(ErrorCode::NoDisjointPair, "no two vertices with disjoint missing colors");
        plan.outer = std::move(*chosen);
        plan.fan[static_cast<std::size_t>(u)] = a;
        plan.fan[static_cast<std::size_t>(w)] = b;
        plan.steps.push_back(step("complete", "fan", fan_elements({u, w}), std::to_string(a) + "," + std::to_string(b)));
        fill_fresh(plan.fan, dg + 6);
        plan.steps.push_back(step("complete", "fan-fresh", "-", join(plan.fan)));
        return plan;
    });
}

ConstructionResult color_corona_diff2(const Graph& g, const TotalColoring& f_g, const Graph& h) {
    require_simple_common(g, f_g, h);
    const int dg = max_degree(g);
    const int dh = max_degree(h);
    require(dh == dg + 2, "Delta(H) = Delta(G)+2", "Delta(H) = " + std::to_string(dh) + ", Delta(G) = " + std::to_string(dg));
    const BipartitionCertificate cert = bipartition(h);
    const int n = h.vertex_count();
    std::optional<std::vector<Vertex>> pair;
    if (!cert.is_bipartite()) {
        pair = find_independent_set(h, 2);
        require(pair.has_value(), "alpha(H) >= 2", "H is complete");
    }
    const int bound = max_degree(simple_corona(g, h).graph) + 3;

    return assemble_simple(TheoremTag{TheoremKind::Diff2}, g, f_g, h, [&](Color c) {
        CopyPlan plan;
        plan.fan.assign(static_cast<std::size_t>(n), 0);
        if (cert.is_bipartite()) {
            BipartitePalette p;
            p.edge_colors.push_back(c);
            for (Color x = 1; x <= dh + 1 && static_cast<int>(p.edge_colors.size()) < dh; ++x)
                if (x != c) p.edge_colors.push_back(x);
            std::sort(p.edge_colors.begin(), p.edge_colors.end());
            for (Color x = 1; x <= dh + 1; ++x)
                if (std::find(p.edge_colors.begin(), p.edge_colors.end(), x) == p.edge_colors.end()) p.first_part_color = x;
            p.second_part_color = dg + 4;
            plan.outer = bipartite_avd_coloring(h, p, bound);
            plan.steps.push_back(step("diff2.bipartite", "konig-copy", "H",
                                      join(p.edge_colors) + "|" + std::to_string(p.first_part_color) + "|" +
                                          std::to_string(p.second_part_color)));
            const Vertex x = cert.parts->first.front();
            plan.fan[static_cast<std::size_t>(x)] = dg + 4;
            plan.steps.push_back(step("diff2.bipartite", "fan", fan_elements({x}), std::to_string(dg + 4)));
            fill_fresh(plan.fan, dg + 5);
            plan.steps.push_back(step("diff2.bipartite", "fan-fresh", "-", join(plan.fan)));
            return plan;
        }
        const Vertex u1 = (*pair)[0], u2 = (*pair)[1];
        const std::vector<MissingColorTarget> targets{{u1, dg + 4}, {u2, dg + 5}};
        plan.outer = realize_missing_colors(h, targets, c, dg + 5, &plan.steps);
        plan.fan[static_cast<std::size_t>(u1)] = dg + 4;
        plan.fan[static_cast<std::size_t>(u2)] = dg + 5;
        plan.steps.push_back(step("diff2", "fan", fan_elements({u1, u2}), std::to_string(dg + 4) + "," + std::to_string(dg + 5)));
        const Color r = dg + 6;
        auto changed = recolor_vertices(plan.outer, c, r);
        plan.outer.set_palette(r);
        if (!changed.empty())
            plan.steps.push_back(step("diff2", "recolor", join(changed, "u"), std::to_string(c) + "," + std::to_string(r)));
        Vertex x = -1;
        for (Vertex y = 0; y < n && x < 0; ++y)
            if (y != u1 && y != u2 && plan.outer.vertex(y) != r) x = y;
        if (x < 0) throw Error(ErrorCode::Unrealizable, "no vertex outside {u1,u2} avoids Delta(G)+6");
        plan.fan[static_cast<std::size_t>(x)] = r;
        plan.steps.push_back(step("diff2", "route", fan_elements({x}), std::to_string(r)));
        fill_fresh(plan.fan, dg + 7);
        plan.steps.push_back(step("diff2", "fan-fresh", "-", join(plan.fan)));
        return plan;
    });
}

ConstructionResult color_corona_bip3(const Graph& g, const TotalColoring& f_g, const Graph& h) {
    require_simple_common(g, f_g, h);
    const int dg = max_degree(g);
    const int dh = max_degree(h);
    const BipartitionCertificate cert = bipartition(h);
    require(cert.is_bipartite(), "H is bipartite", "odd cycle found");
    require(dh == dg + 3, "Delta(H) = Delta(G)+3", "Delta(H) = " + std::to_string(dh) + ", Delta(G) = " + std::to_string(dg));
    const int n = h.vertex_count();
    const int bound = max_degree(simple_corona(g, h).graph) + 3;
    const auto& v1 = cert.parts->first;
    const auto& v2 = cert.parts->second;

    // x1 in V1, x2 in V2: non-adjacent first, then different degrees, then any.
    std::optional<std::pair<Vertex, Vertex>> pick;
    for (int pass = 0; pass < 3 && !pick; ++pass)
        for (Vertex a : v1) {
            for (Vertex b : v2) {
                const bool ok = pass == 0 ? !h.adjacent(a, b) : pass == 1 ? h.degree(a) != h.degree(b) : true;
                if (ok) {
                    pick = std::make_pair(a, b);
                    break;
                }
            }
            if (pick) break;
        }
    require(pick.has_value(), "both parts non-empty", "H has an empty side");
    const auto [x1, x2] = *pick;

    return assemble_simple(TheoremTag{TheoremKind::Bip3}, g, f_g, h, [&](Color) {
        // Edges take all of [Delta(G)+3], so the center color c sits on edges only.
        CopyPlan plan;
        plan.fan.assign(static_cast<std::size_t>(n), 0);
        BipartitePalette p;
        for (Color x = 1; x <= dg + 3; ++x) p.edge_colors.push_back(x);
        p.first_part_color = dg + 4;
        p.second_part_color = dg + 5;
        plan.outer = bipartite_avd_coloring(h, p, bound);
        plan.steps.push_back(step("bip3", "konig-copy", "H", join(p.edge_colors) + "|" + std::to_string(dg + 4) + "|" +
                                                                 std::to_string(dg + 5)));
        plan.fan[static_cast<std::size_t>(x1)] = dg + 5;
        plan.fan[static_cast<std::size_t>(x2)] = dg + 4;
        plan.steps.push_back(step("bip3", "fan", fan_elements({x1, x2}), std::to_string(dg + 5) + "," + std::to_string(dg + 4)));
        const Color extra = dg + 6;
        if (closed_colors(h, plan.outer, x1, dg + 5) == closed_colors(h, plan.outer, x2, dg + 4)) {
            plan.outer.set_vertex(x2, extra);
            plan.steps.push_back(step("bip3", "recolor", "u" + std::to_string(x2), std::to_string(dg + 5) + "," + std::to_string(extra)));
            Vertex x3 = -1;
            for (Vertex y : v2)
                if (y != x2) {
                    x3 = y;
                    break;
                }
            if (x3 < 0) throw Error(ErrorCode::Unrealizable, "second part has no vertex besides x2");
            plan.fan[static_cast<std::size_t>(x3)] = extra;
            plan.steps.push_back(step("bip3", "route", fan_elements({x3}), std::to_string(extra)));
        } else {
            auto it = std::find(plan.fan.begin(), plan.fan.end(), 0);
            if (it != plan.fan.end()) {
                *it = extra;
                plan.steps.push_back(step("bip3", "fan", fan_elements({static_cast<Vertex>(it - plan.fan.begin())}),
                                          std::to_string(extra)));
            }
        }
        fill_fresh(plan.fan, dg + 7);
        plan.steps.push_back(step("bip3", "fan-fresh", "-", join(plan.fan)));
        return plan;
    });
}

ConstructionResult color_corona_diffk(const Graph& g, const TotalColoring& f_g, const Graph& h, int k) {
    require(k >= 3, "k >= 3", "k = " + std::to_string(k));
    require_simple_common(g, f_g, h);
    const int dg = max_degree(g);
    const int dh = max_degree(h);
    require(dh == dg + k, "Delta(H) = Delta(G)+k", "Delta(H) = " + std::to_string(dh) + ", Delta(G)+k = " + std::to_string(dg + k));
    require(dh >= k + 1, "Delta(H) >= k+1", "Delta(H) = " + std::to_string(dh));
    require(find_independent_set(h, k).has_value(), "alpha(H) >= k", "no independent set of size " + std::to_string(k));
    const auto chosen = find_diffk_vertices(h, k);
    require(chosen.has_value(), "degree conditions on u_1..u_k", "no independent k-set satisfies them");
    const int n = h.vertex_count();
    std::vector<MissingColorTarget> targets;
    for (int i = 1; i <= k; ++i) targets.push_back({(*chosen)[static_cast<std::size_t>(i - 1)], dg + 3 + i});

    return assemble_simple(TheoremTag::diffk(k), g, f_g, h, [&](Color c) {
        CopyPlan plan;
        plan.fan.assign(static_cast<std::size_t>(n), 0);
        plan.outer = realize_missing_colors(h, targets, c, dh + 3, &plan.steps);
        std::vector<Vertex> us;
        std::vector<Color> cs;
        for (const auto& t : targets) {
            plan.fan[static_cast<std::size_t>(t.vertex)] = t.color;
            us.push_back(t.vertex);
            cs.push_back(t.color);
        }
        plan.steps.push_back(step("diffk", "fan", fan_elements(us), join(cs)));
        const Color r = dg + k + 4;
        auto changed = recolor_vertices(plan.outer, c, r);
        plan.outer.set_palette(r);
        if (!changed.empty())
            plan.steps.push_back(step("diffk", "recolor", join(changed, "u"), std::to_string(c) + "," + std::to_string(r)));
        Vertex x = -1;
        for (Vertex y = 0; y < n && x < 0; ++y)
            if (std::find(us.begin(), us.end(), y) == us.end() && plan.outer.vertex(y) != r) x = y;
        if (x < 0) throw Error(ErrorCode::Unrealizable, "no vertex outside U avoids Delta(G)+k+4");
        plan.fan[static_cast<std::size_t>(x)] = r;
        plan.steps.push_back(step("diffk", "route", fan_elements({x}), std::to_string(r)));
        fill_fresh(plan.fan, dg + k + 5);
        plan.steps.push_back(step("diffk", "fan-fresh", "-", join(plan.fan)));
        return plan;
    });
}

// ---------------------------------------------------------------------------
// Dispatch

bool TheoremAudit::applicable() const {
    return std::all_of(checks.begin(), checks.end(), [](const HypothesisCheck& c) { return c.passed; });
}

namespace {

HypothesisCheck check(std::string name, bool passed, std::string detail) {
    return {std::move(name), passed, std::move(detail)};
}

std::vector<HypothesisCheck> structural_checks(const Graph& g, std::span<const Graph> hs) {
    std::vector<HypothesisCheck> out;
    out.push_back(check("G connected, n >= 2", g.vertex_count() >= 2 && is_connected(g),
                        "n_G = " + std::to_string(g.vertex_count())));
    bool outers = !hs.empty() && std::all_of(hs.begin(), hs.end(), [](const Graph& h) {
        return h.vertex_count() >= 2 && is_connected(h);
    });
    out.push_back(check("H connected, n >= 2", outers, outers ? "ok" : "some outer graph fails"));
    return out;
}

}  // namespace

std::vector<TheoremAudit> applicable_theorems(const Graph& g, std::span<const Graph> hs) {
    TheoremAudit gen{TheoremTag{TheoremKind::GenCorona}, structural_checks(g, hs)};
    gen.checks.push_back(check("one outer graph per center", static_cast<int>(hs.size()) == g.vertex_count(),
                               std::to_string(hs.size()) + " outer graphs"));
    const int dg = max_degree(g);
    int worst = 0;
    for (const Graph& h : hs) worst = std::max(worst, max_degree(h));
    gen.checks.push_back(check("Delta(H_i) <= Delta(G)", worst <= dg,
                               "max Delta(H_i) = " + std::to_string(worst) + ", Delta(G) = " + std::to_string(dg)));
    return {gen};
}

std::vector<TheoremAudit> applicable_theorems(const Graph& g, const Graph& h) {
    std::vector<Graph> hs(static_cast<std::size_t>(g.vertex_count()), h);
    std::vector<TheoremAudit> out = applicable_theorems(g, std::span<const Graph>(hs));
    const auto common = structural_checks(g, std::span<const Graph>(&h, 1));
    const int dg = max_degree(g), dh = max_degree(h);
    const std::string deltas = "Delta(G) = " + std::to_string(dg) + ", Delta(H) = " + std::to_string(dh);
    const bool bip = is_connected(h) && h.vertex_count() >= 1 && bipartition(h).is_bipartite();

    TheoremAudit diff1{TheoremTag{TheoremKind::Diff1}, common};
    diff1.checks.push_back(check("Delta(H) = Delta(G)+1", dh == dg + 1, deltas));
    out.push_back(diff1);

    TheoremAudit complete{TheoremTag{TheoremKind::CompleteH}, common};
    complete.checks.push_back(check("H complete", is_complete(h), "|E(H)| = " + std::to_string(h.edge_count())));
    complete.checks.push_back(check("n_H = Delta(G)+3", h.vertex_count() == dg + 3, "n_H = " + std::to_string(h.vertex_count())));
    out.push_back(complete);

    TheoremAudit diff2{TheoremTag{TheoremKind::Diff2}, common};
    diff2.checks.push_back(check("Delta(H) = Delta(G)+2", dh == dg + 2, deltas));
    {
        const bool alpha2 = bip || find_independent_set(h, 2).has_value();
        diff2.checks.push_back(check("H bipartite or alpha(H) >= 2", alpha2, bip ? "bipartite" : alpha2 ? "alpha >= 2" : "alpha(H) = 1"));
    }
    out.push_back(diff2);

    TheoremAudit bip3{TheoremTag{TheoremKind::Bip3}, common};
    bip3.checks.push_back(check("H bipartite", bip, bip ? "bipartite" : "odd cycle"));
    bip3.checks.push_back(check("Delta(H) = Delta(G)+3", dh == dg + 3, deltas));
    out.push_back(bip3);

    const int k = std::max(3, dh - dg);
    TheoremAudit diffk{TheoremTag::diffk(k), common};
    diffk.checks.push_back(check("Delta(H) - Delta(G) >= 3", dh - dg >= 3, deltas));
    if (dh - dg >= 3) {
        diffk.checks.push_back(check("Delta(H) >= k+1", dh >= k + 1, "k = " + std::to_string(k)));
        const bool alpha = find_independent_set(h, k).has_value();
        diffk.checks.push_back(check("alpha(H) >= k", alpha, alpha ? "ok" : "too small"));
        const bool degs = alpha && find_diffk_vertices(h, k).has_value();
        diffk.checks.push_back(check("degree conditions on u_1..u_k", degs, degs ? "ok" : "no suitable set"));
    }
    out.push_back(diffk);
    return out;
}

std::string format_audit(const std::vector<TheoremAudit>& audits) {
    std::ostringstream os;
    for (const TheoremAudit& a : audits) {
        os << a.tag.name() << '\t' << (a.applicable() ? "applicable" : "not-applicable") << '\n';
        for (const HypothesisCheck& c : a.checks)
            os << "  " << (c.passed ? "pass" : "FAIL") << '\t' << c.name << '\t' << c.detail << '\n';
    }
    return os.str();
}

BaseColoring base_avd_coloring(const Graph& g, int min_t) {
    ChromaticResult r = exact_avd_chromatic_with_witness(g);
    const int dg = max_degree(g);
    BaseColoring base;
    base.t = std::max(min_t, r.value - dg);
    base.coloring = std::move(r.coloring);
    base.coloring.set_palette(dg + base.t);
    return base;
}

ConstructionResult color_corona_with(const TheoremTag& tag, const Graph& g, const Graph& h) {
    if (tag.kind == TheoremKind::GenCorona) {
        BaseColoring base = base_avd_coloring(g, 2);
        std::vector<Graph> hs(static_cast<std::size_t>(g.vertex_count()), h);
        return color_generalized_corona(g, base.coloring, hs, base.t);
    }
    BaseColoring base = base_avd_coloring(g, 3);
    if (base.t > 3) violated("chi''_a(G) <= Delta(G)+3", "solver found " + std::to_string(max_degree(g) + base.t));
    switch (tag.kind) {
        case TheoremKind::Diff1: return color_corona_diff1(g, base.coloring, h);
        case TheoremKind::CompleteH: return color_corona_complete(g, base.coloring, h);
        case TheoremKind::Diff2: return color_corona_diff2(g, base.coloring, h);
        case TheoremKind::Bip3: return color_corona_bip3(g, base.coloring, h);
        case TheoremKind::DiffK: return color_corona_diffk(g, base.coloring, h, tag.k);
        case TheoremKind::GenCorona: break;
    }
    throw Error(ErrorCode::NoApplicableTheorem, "unknown theorem");
}

ConstructionResult color_corona_auto(const Graph& g, const Graph& h) {
    const auto audits = applicable_theorems(g, h);
    for (const TheoremAudit& a : audits)
        if (a.applicable()) return color_corona_with(a.tag, g, h);
    throw Error(ErrorCode::NoApplicableTheorem, "\n" + format_audit(audits));
}

ConstructionResult color_corona_auto(const Graph& g, std::span<const Graph> hs) {
    const auto audits = applicable_theorems(g, hs);
    if (!audits.front().applicable()) throw Error(ErrorCode::NoApplicableTheorem, "\n" + format_audit(audits));
    BaseColoring base = base_avd_coloring(g, 2);
    return color_generalized_corona(g, base.coloring, hs, base.t);
}

}  // namespace avd
