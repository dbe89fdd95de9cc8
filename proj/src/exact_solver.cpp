#include "avd/exact_solver.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "avd/error.hpp"

namespace avd {

namespace {

constexpr int kMaxPalette = 63;

std::uint64_t bit(Color c) { return std::uint64_t{1} << static_cast<unsigned>(c); }
std::uint64_t palette_mask(int k) { return k >= kMaxPalette ? (~std::uint64_t{0} << 1) : ((bit(k + 1) - 1) & ~std::uint64_t{1}); }

std::string color_str(Color c) { return std::to_string(c); }

/// Backtracking over total colorings with forward checking. Element ids:
/// vertex v -> v, edge e -> n + e; the search visits them in id order.
class TotalSearch {
public:
    TotalSearch(const Graph& g, int k, SearchMode mode, const ColoringConstraints& cons, SearchBudget budget)
        : g_(g), k_(k), mode_(mode), symmetric_(cons.empty()), max_nodes_(budget.max_nodes) {
        n_ = g.vertex_count();
        m_ = g.edge_count();
        total_ = n_ + m_;
        const auto N = static_cast<std::size_t>(total_);
        conflicts_.resize(N);
        for (EdgeId e = 0; e < m_; ++e) {
            const Edge& ed = g.edge(e);
            link(ed.u, ed.v);
            link(ed.u, n_ + e);
            link(ed.v, n_ + e);
        }
        for (Vertex v = 0; v < n_; ++v) {
            const auto inc = g.incidences(v);
            for (std::size_t i = 0; i < inc.size(); ++i)
                for (std::size_t j = i + 1; j < inc.size(); ++j) link(n_ + inc[i].edge, n_ + inc[j].edge);
        }
        // Only conflicts with later elements matter: earlier ones are assigned first.
        for (std::size_t p = 0; p < N; ++p) {
            auto& c = conflicts_[p];
            std::sort(c.begin(), c.end());
            c.erase(std::remove_if(c.begin(), c.end(), [p](int q) { return q <= static_cast<int>(p); }), c.end());
        }

        domain_.assign(N, palette_mask(k));
        apply_constraints(cons);
        avail_ = domain_;
        block_.assign(N * static_cast<std::size_t>(k + 1), 0);
        color_.assign(N, 0);
        remaining_.resize(static_cast<std::size_t>(n_));
        vset_.assign(static_cast<std::size_t>(n_), 0);
        for (Vertex v = 0; v < n_; ++v) remaining_[static_cast<std::size_t>(v)] = g.degree(v) + 1;
    }

    SearchResult run() {
        SearchResult r;
        bool wiped = std::any_of(avail_.begin(), avail_.end(), [](std::uint64_t a) { return a == 0; });
        bool ok = !wiped && dfs(0, 0);
        r.nodes = nodes_;
        if (ok) {
            r.status = SearchStatus::Found;
            std::vector<Color> vc(color_.begin(), color_.begin() + n_), ec(color_.begin() + n_, color_.end());
            r.coloring = TotalColoring(k_, std::move(vc), std::move(ec));
        } else {
            r.status = exhausted_ ? SearchStatus::Exhausted : SearchStatus::Unsatisfiable;
        }
        return r;
    }

private:
    void link(int a, int b) {
        conflicts_[static_cast<std::size_t>(a)].push_back(b);
        conflicts_[static_cast<std::size_t>(b)].push_back(a);
    }

    void apply_constraints(const ColoringConstraints& cons) {
        auto check_vertex = [&](Vertex v) {
            if (!g_.has_vertex(v)) throw Error(ErrorCode::BadVertex, "constraint on vertex " + std::to_string(v));
        };
        auto check_color = [&](Color c) {
            if (c < 1 || c > k_)
                throw Error(ErrorCode::ContradictoryConstraints,
                            "constraint color " + color_str(c) + " outside 1.." + std::to_string(k_));
        };
        for (const auto& [v, colors] : cons.forbidden_vertex_colors) {
            check_vertex(v);
            for (Color c : colors) {
                check_color(c);
                domain_[static_cast<std::size_t>(v)] &= ~bit(c);
            }
        }
        for (const auto& [v, colors] : cons.required_missing) {
            check_vertex(v);
            for (Color c : colors) {
                check_color(c);
                domain_[static_cast<std::size_t>(v)] &= ~bit(c);
                for (const auto& inc : g_.incidences(v)) domain_[static_cast<std::size_t>(n_ + inc.edge)] &= ~bit(c);
            }
        }
        for (const auto& [v, c] : cons.fixed_vertices) {
            check_vertex(v);
            check_color(c);
            auto& d = domain_[static_cast<std::size_t>(v)];
            if (!(d & bit(c)))
                throw Error(ErrorCode::ContradictoryConstraints,
                            "fixed color " + color_str(c) + " of vertex " + std::to_string(v) + " is excluded");
            d = bit(c);
        }
        for (const auto& [key, c] : cons.fixed_edges) {
            auto e = g_.edge_id(key.first, key.second);
            if (!e)
                throw Error(ErrorCode::BadVertex, "constraint on missing edge " + std::to_string(key.first) + "-" +
                                                      std::to_string(key.second));
            check_color(c);
            auto& d = domain_[static_cast<std::size_t>(n_ + *e)];
            if (!(d & bit(c)))
                throw Error(ErrorCode::ContradictoryConstraints, "fixed color " + color_str(c) + " of edge is excluded");
            d = bit(c);
        }
    }

    // Touched vertices of element p: itself, or both endpoints.
    template <typename F>
    void for_touched(int p, F&& f) {
        if (p < n_) {
            f(p);
        } else {
            const Edge& ed = g_.edge(p - n_);
            f(ed.u);
            f(ed.v);
        }
    }

    bool distinguishes(Vertex v) const {
        const auto sv = static_cast<std::size_t>(v);
        for (const auto& inc : g_.incidences(v)) {
            const auto su = static_cast<std::size_t>(inc.neighbor);
            if (remaining_[su] == 0 && vset_[su] == vset_[sv]) return false;
        }
        return true;
    }

    bool assign(int p, Color x) {
        const auto sp = static_cast<std::size_t>(p);
        color_[sp] = x;
        bool ok = true;
        for (int q : conflicts_[sp]) {
            auto& b = block_[static_cast<std::size_t>(q) * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(x)];
            if (b++ == 0) {
                avail_[static_cast<std::size_t>(q)] &= ~bit(x);
                if (avail_[static_cast<std::size_t>(q)] == 0) ok = false;
            }
        }
        for_touched(p, [&](Vertex v) {
            vset_[static_cast<std::size_t>(v)] |= bit(x);
            --remaining_[static_cast<std::size_t>(v)];
        });
        if (ok && mode_ == SearchMode::AvdTotal) {
            for_touched(p, [&](Vertex v) {
                if (ok && remaining_[static_cast<std::size_t>(v)] == 0 && !distinguishes(v)) ok = false;
            });
        }
        return ok;
    }

    void unassign(int p) {
        const auto sp = static_cast<std::size_t>(p);
        const Color x = color_[sp];
        for (int q : conflicts_[sp]) {
            auto& b = block_[static_cast<std::size_t>(q) * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(x)];
            if (--b == 0) avail_[static_cast<std::size_t>(q)] |= bit(x) & domain_[static_cast<std::size_t>(q)];
        }
        for_touched(p, [&](Vertex v) {
            vset_[static_cast<std::size_t>(v)] &= ~bit(x);
            ++remaining_[static_cast<std::size_t>(v)];
        });
        color_[sp] = 0;
    }

    bool dfs(int p, int max_used) {
        if (p == total_) return true;
        std::uint64_t cand = avail_[static_cast<std::size_t>(p)];
        if (symmetric_ && max_used + 1 < kMaxPalette) cand &= palette_mask(max_used + 1);
        while (cand) {
            const Color x = std::countr_zero(cand);
            cand &= cand - 1;
            if (++nodes_ > max_nodes_) {
                exhausted_ = true;
                return false;
            }
            const bool ok = assign(p, x);
            if (ok && dfs(p + 1, std::max(max_used, x))) return true;
            unassign(p);
            if (exhausted_) return false;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    SearchMode mode_;
    bool symmetric_;
    std::int64_t max_nodes_;
    std::int64_t nodes_ = 0;
    bool exhausted_ = false;

    int n_ = 0, m_ = 0, total_ = 0;
    std::vector<std::vector<int>> conflicts_;
    std::vector<std::uint64_t> domain_;
    std::vector<std::uint64_t> avail_;
    std::vector<std::uint8_t> block_;
    std::vector<Color> color_;
    std::vector<int> remaining_;
    std::vector<std::uint64_t> vset_;
};

void require_budget(SearchBudget b) {
    if (b.max_nodes <= 0) throw Error(ErrorCode::OutOfRange, "search budget must be positive");
}

/// Proper coloring of a conflict graph given as adjacency lists over 0..N-1.
/// Returns Found/Unsatisfiable/Exhausted for palette k.
class ClassicSearch {
public:
    ClassicSearch(std::vector<std::vector<int>> adj, int k, std::int64_t max_nodes)
        : adj_(std::move(adj)), k_(k), max_nodes_(max_nodes), color_(adj_.size(), 0) {}

    SearchStatus run() {
        if (dfs(0, 0)) return SearchStatus::Found;
        return exhausted_ ? SearchStatus::Exhausted : SearchStatus::Unsatisfiable;
    }

private:
    bool dfs(std::size_t p, int max_used) {
        if (p == adj_.size()) return true;
        const int limit = std::min(k_, max_used + 1);
        for (int x = 1; x <= limit; ++x) {
            bool clash = std::any_of(adj_[p].begin(), adj_[p].end(),
                                     [&](int q) { return static_cast<std::size_t>(q) < p && color_[static_cast<std::size_t>(q)] == x; });
            if (clash) continue;
            if (++nodes_ > max_nodes_) {
                exhausted_ = true;
                return false;
            }
            color_[p] = x;
            if (dfs(p + 1, std::max(max_used, x))) return true;
            color_[p] = 0;
            if (exhausted_) return false;
        }
        return false;
    }

    std::vector<std::vector<int>> adj_;
    int k_;
    std::int64_t max_nodes_;
    std::int64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<int> color_;
};

int smallest_classic(const std::vector<std::vector<int>>& adj, int start, SearchBudget budget, const char* what) {
    if (adj.empty()) return 0;
    for (int k = std::max(start, 1);; ++k) {
        ClassicSearch s(adj, k, budget.max_nodes);
        switch (s.run()) {
            case SearchStatus::Found: return k;
            case SearchStatus::Exhausted:
                throw Error(ErrorCode::BudgetExceeded, std::string(what) + " search exhausted at k=" + std::to_string(k));
            case SearchStatus::Unsatisfiable: break;
        }
    }
}

}  // namespace

bool ColoringConstraints::satisfied_by(const Graph& g, const TotalColoring& f) const {
    for (const auto& [v, colors] : forbidden_vertex_colors)
        if (colors.contains(f.vertex(v))) return false;
    for (const auto& [v, colors] : required_missing) {
        ColorSet present = color_set(g, f, v);
        for (Color c : colors)
            if (present.contains(c)) return false;
    }
    for (const auto& [v, c] : fixed_vertices)
        if (f.vertex(v) != c) return false;
    for (const auto& [key, c] : fixed_edges) {
        auto e = g.edge_id(key.first, key.second);
        if (!e || f.edge(*e) != c) return false;
    }
    return true;
}

int avd_lower_bound(const Graph& g) {
    if (g.vertex_count() < 2) throw Error(ErrorCode::TooSmall, "avd lower bound needs at least 2 vertices");
    const int delta = max_degree(g);
    for (const Edge& e : g.edges())
        if (g.degree(e.u) == delta && g.degree(e.v) == delta) return delta + 2;
    return delta + 1;
}

SearchResult find_constrained_coloring(const Graph& g, int k, SearchMode mode, const ColoringConstraints& c,
                                       SearchBudget budget) {
    require_budget(budget);
    if (k < 1) throw Error(ErrorCode::OutOfRange, "palette must be positive");
    if (k > kMaxPalette) throw Error(ErrorCode::OutOfRange, "exact search supports at most 63 colors");
    TotalSearch search(g, k, mode, c, budget);
    return search.run();
}

ChromaticResult exact_avd_chromatic_with_witness(const Graph& g, SearchBudget budget) {
    if (g.vertex_count() < 2) throw Error(ErrorCode::TooSmall, "avd chromatic number needs at least 2 vertices");
    if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "avd chromatic number needs a connected graph");
    for (int k = avd_lower_bound(g); k <= kMaxPalette; ++k) {
        SearchResult r = find_constrained_coloring(g, k, SearchMode::AvdTotal, {}, budget);
        if (r.status == SearchStatus::Found) return {k, *r.coloring};
        if (r.status == SearchStatus::Exhausted)
            throw Error(ErrorCode::BudgetExceeded, "avd search exhausted at k=" + std::to_string(k));
    }
    throw Error(ErrorCode::BudgetExceeded, "no avd coloring within 63 colors");
}

int exact_avd_chromatic(const Graph& g, SearchBudget budget) { return exact_avd_chromatic_with_witness(g, budget).value; }

ChromaticResult exact_total_chromatic_with_witness(const Graph& g, SearchBudget budget) {
    if (g.vertex_count() < 1) throw Error(ErrorCode::TooSmall, "empty graph");
    for (int k = max_degree(g) + 1; k <= kMaxPalette; ++k) {
        SearchResult r = find_constrained_coloring(g, k, SearchMode::ProperTotal, {}, budget);
        if (r.status == SearchStatus::Found) return {k, *r.coloring};
        if (r.status == SearchStatus::Exhausted)
            throw Error(ErrorCode::BudgetExceeded, "total search exhausted at k=" + std::to_string(k));
    }
    throw Error(ErrorCode::BudgetExceeded, "no total coloring within 63 colors");
}

int exact_total_chromatic(const Graph& g, SearchBudget budget) { return exact_total_chromatic_with_witness(g, budget).value; }

int exact_chromatic_number(const Graph& g, SearchBudget budget) {
    require_budget(budget);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (const auto& inc : g.incidences(v)) adj[static_cast<std::size_t>(v)].push_back(inc.neighbor);
    return smallest_classic(adj, g.edge_count() > 0 ? 2 : 1, budget, "chromatic number");
}

int exact_chromatic_index(const Graph& g, SearchBudget budget) {
    require_budget(budget);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.edge_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto inc = g.incidences(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = 0; j < inc.size(); ++j)
                if (i != j) adj[static_cast<std::size_t>(inc[i].edge)].push_back(inc[j].edge);
    }
    return smallest_classic(adj, max_degree(g), budget, "chromatic index");
}

}  // namespace avd
