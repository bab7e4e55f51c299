#pragma once

#include "betasat/formula.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace betasat {

/// Sequence of distinct variables, eliminated front to back.
using EliminationOrdering = std::vector<Var>;

/// Hyperedges are sorted vertex lists; the edge list itself is sorted and
/// duplicate-free.
struct Hypergraph {
    std::vector<Var> vertices;
    std::vector<std::vector<Var>> edges;

    /// Normalizes edges and adds any edge vertex missing from `vertices`.
    static Hypergraph make(std::vector<Var> vertices, std::vector<std::vector<Var>> edges);

    bool operator==(const Hypergraph&) const = default;
};

/// Bipartite graph with "left" and "right" vertex classes, each indexed from 0.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(std::size_t left, std::size_t right,
                   std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

    std::size_t left_size() const { return left_adj_.size(); }
    std::size_t right_size() const { return right_adj_.size(); }
    std::size_t vertex_count() const { return left_size() + right_size(); }
    std::size_t edge_count() const { return edges_; }

    std::span<const std::uint32_t> left_neighbors(std::uint32_t l) const { return left_adj_.at(l); }
    std::span<const std::uint32_t> right_neighbors(std::uint32_t r) const { return right_adj_.at(r); }
    bool has_edge(std::uint32_t l, std::uint32_t r) const;

private:
    std::vector<std::vector<std::uint32_t>> left_adj_;
    std::vector<std::vector<std::uint32_t>> right_adj_;
    std::size_t edges_ = 0;
};

/// I(F): left class = var(F) in ascending order, right class = the clauses of
/// F in canonical order.
struct IncidenceGraph {
    std::vector<Var> variables;
    std::vector<Clause> clauses;
    BipartiteGraph graph;
};

Hypergraph build_hypergraph(const Formula& f);
IncidenceGraph build_incidence(const Formula& f);
/// I(H): left class = H.vertices, right class = H.edges.
BipartiteGraph build_incidence(const Hypergraph& h);

/// GYO reduction to a fixpoint.
bool is_alpha_acyclic(const Hypergraph& h);

/// Variables whose clause variable-sets form a chain under inclusion.
std::vector<Var> weakly_simplicial_variables(const Formula& f);

/// Greedy weakly simplicial elimination over the variable side of I(F),
/// smallest id first. Covers var(F); nullopt iff F is not beta-acyclic.
std::optional<EliminationOrdering> beta_elimination_ordering(const Formula& f);

inline bool is_beta_acyclic(const Formula& f) { return beta_elimination_ordering(f).has_value(); }

/// Deletes weakly simplicial vertices (left side first, smallest index first)
/// until none is left or the graph is empty.
bool is_chordal_bipartite(const BipartiteGraph& g);
inline bool is_chordal_bipartite(const IncidenceGraph& g) { return is_chordal_bipartite(g.graph); }

} // namespace betasat
