#include "betasat/structure.hpp"

#include <algorithm>

namespace betasat {

namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool includes(const std::vector<std::uint32_t>& big, const std::vector<std::uint32_t>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/// True iff the given sets, each sorted, form a chain under inclusion.
bool is_chain(std::vector<const std::vector<std::uint32_t>*> sets) {
    std::sort(sets.begin(), sets.end(), [](auto* a, auto* b) { return a->size() < b->size(); });
    for (std::size_t i = 1; i < sets.size(); ++i)
        if (!includes(*sets[i], *sets[i - 1])) return false;
    return true;
}

bool is_weakly_simplicial_in(Var x, const std::vector<std::vector<Var>>& edges) {
    std::vector<const std::vector<Var>*> containing;
    for (const auto& e : edges)
        if (std::binary_search(e.begin(), e.end(), x)) containing.push_back(&e);
    return is_chain(std::move(containing));
}

std::vector<std::vector<Var>> clause_var_sets(const Formula& f) {
    std::vector<std::vector<Var>> edges;
    edges.reserve(f.size());
    for (const auto& c : f.clauses()) edges.push_back(c.variables());
    sort_unique(edges);
    return edges;
}

} // namespace

Hypergraph Hypergraph::make(std::vector<Var> vertices, std::vector<std::vector<Var>> edges) {
    for (auto& e : edges) {
        sort_unique(e);
        vertices.insert(vertices.end(), e.begin(), e.end());
    }
    sort_unique(edges);
    sort_unique(vertices);
    return Hypergraph{std::move(vertices), std::move(edges)};
}

BipartiteGraph::BipartiteGraph(std::size_t left, std::size_t right,
                               std::span<const std::pair<std::uint32_t, std::uint32_t>> edges)
    : left_adj_(left), right_adj_(right) {
    for (auto [l, r] : edges) {
        left_adj_.at(l).push_back(r);
        right_adj_.at(r).push_back(l);
    }
    for (auto& a : left_adj_) sort_unique(a);
    for (auto& a : right_adj_) sort_unique(a);
    for (const auto& a : left_adj_) edges_ += a.size();
}

bool BipartiteGraph::has_edge(std::uint32_t l, std::uint32_t r) const {
    const auto& a = left_adj_.at(l);
    return std::binary_search(a.begin(), a.end(), r);
}

Hypergraph build_hypergraph(const Formula& f) {
    auto vars = f.variables();
    return Hypergraph{std::vector<Var>(vars.begin(), vars.end()), clause_var_sets(f)};
}

IncidenceGraph build_incidence(const Formula& f) {
    IncidenceGraph g;
    g.variables.assign(f.variables().begin(), f.variables().end());
    g.clauses.assign(f.clauses().begin(), f.clauses().end());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t ci = 0; ci < g.clauses.size(); ++ci) {
        for (Lit l : g.clauses[ci]) {
            auto it = std::lower_bound(g.variables.begin(), g.variables.end(), l.var());
            edges.emplace_back(static_cast<std::uint32_t>(it - g.variables.begin()), ci);
        }
    }
    g.graph = BipartiteGraph(g.variables.size(), g.clauses.size(), edges);
    return g;
}

BipartiteGraph build_incidence(const Hypergraph& h) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t ei = 0; ei < h.edges.size(); ++ei) {
        for (Var v : h.edges[ei]) {
            auto it = std::lower_bound(h.vertices.begin(), h.vertices.end(), v);
            edges.emplace_back(static_cast<std::uint32_t>(it - h.vertices.begin()), ei);
        }
    }
    return BipartiteGraph(h.vertices.size(), h.edges.size(), edges);
}

bool is_alpha_acyclic(const Hypergraph& h) {
    std::vector<std::vector<Var>> edges = h.edges;
    std::vector<Var> vertices = h.vertices;

    bool changed = true;
    while (changed) {
        changed = false;

        // Rule 1: drop empty edges and edges contained in another edge. Equal
        // edges keep their first copy.
        std::vector<std::vector<Var>> kept;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            bool drop = edges[i].empty();
            for (std::size_t j = 0; j < edges.size() && !drop; ++j) {
                if (i == j) continue;
                if (includes(edges[j], edges[i]) && (edges[i] != edges[j] || j < i)) drop = true;
            }
            if (drop)
                changed = true;
            else
                kept.push_back(edges[i]);
        }
        edges = std::move(kept);

        // Rule 2: drop vertices in at most one edge.
        std::vector<Var> keep_vertices;
        for (Var v : vertices) {
            std::size_t count = 0;
            for (const auto& e : edges)
                if (std::binary_search(e.begin(), e.end(), v)) ++count;
            if (count <= 1) {
                changed = true;
                for (auto& e : edges) e.erase(std::remove(e.begin(), e.end(), v), e.end());
            } else {
                keep_vertices.push_back(v);
            }
        }
        vertices = std::move(keep_vertices);
    }
    return edges.empty() && vertices.empty();
}

std::vector<Var> weakly_simplicial_variables(const Formula& f) {
    const auto edges = clause_var_sets(f);
    std::vector<Var> out;
    for (Var x : f.variables())
        if (is_weakly_simplicial_in(x, edges)) out.push_back(x);
    return out;
}

std::optional<EliminationOrdering> beta_elimination_ordering(const Formula& f) {
    auto edges = clause_var_sets(f);
    std::vector<Var> remaining(f.variables().begin(), f.variables().end());
    EliminationOrdering order;
    order.reserve(remaining.size());

    while (!remaining.empty()) {
        auto pick = std::find_if(remaining.begin(), remaining.end(),
                                 [&](Var x) { return is_weakly_simplicial_in(x, edges); });
        if (pick == remaining.end()) return std::nullopt;
        const Var x = *pick;
        order.push_back(x);
        remaining.erase(pick);

        // Delete the variable vertex; emptied clause vertices disappear and
        // clause vertices that became equal merge.
        std::vector<std::vector<Var>> next;
        next.reserve(edges.size());
        for (auto& e : edges) {
            e.erase(std::remove(e.begin(), e.end(), x), e.end());
            if (!e.empty()) next.push_back(std::move(e));
        }
        sort_unique(next);
        edges = std::move(next);
    }
    return order;
}

bool is_chordal_bipartite(const BipartiteGraph& g) {
    const std::size_t left = g.left_size();
    const std::size_t n = g.vertex_count();
    // Unified vertex ids: left i -> i, right j -> left + j.
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (std::uint32_t l = 0; l < left; ++l) {
        for (auto r : g.left_neighbors(l)) {
            adj[l].push_back(static_cast<std::uint32_t>(left + r));
            adj[left + r].push_back(l);
        }
    }
    for (auto& a : adj) sort_unique(a);

    std::vector<bool> alive(n, true);
    std::size_t alive_count = n;

    auto weakly_simplicial = [&](std::uint32_t v) {
        std::vector<std::vector<std::uint32_t>> hoods;
        for (auto u : adj[v]) {
            if (!alive[u]) continue;
            std::vector<std::uint32_t> hood;
            for (auto w : adj[u])
                if (alive[w]) hood.push_back(w);
            hoods.push_back(std::move(hood));
        }
        std::vector<const std::vector<std::uint32_t>*> ptrs;
        for (const auto& h : hoods) ptrs.push_back(&h);
        return is_chain(std::move(ptrs));
    };

    while (alive_count > 0) {
        std::optional<std::uint32_t> pick;
        for (std::uint32_t v = 0; v < n && !pick; ++v)
            if (alive[v] && weakly_simplicial(v)) pick = v;
        if (!pick) return false;
        alive[*pick] = false;
        --alive_count;
    }
    return true;
}

} // namespace betasat
