#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace betasat {

using Element = std::uint32_t;

/// Family S_1..S_m over a ground set V(S). The ground set is the union of the
/// members unless it was widened explicitly.
struct SetFamily {
    std::vector<Element> universe; // sorted, duplicate-free
    std::vector<std::vector<Element>> sets; // each sorted, duplicate-free

    /// Normalizes members and takes `universe` ∪ (union of members) as V(S).
    static SetFamily make(std::vector<std::vector<Element>> sets, std::vector<Element> universe = {});
};

/// Vertex v_index^class; classes and indices are 0-based here, names are 1-based.
struct KVertex {
    std::size_t cls = 0;
    std::size_t index = 0;
    auto operator<=>(const KVertex&) const = default;
};

/// k-partite graph with explicit class sizes; edges join distinct classes.
struct KPartiteGraph {
    std::vector<std::size_t> class_sizes;
    std::vector<std::pair<KVertex, KVertex>> edges;

    static KPartiteGraph balanced(std::size_t k, std::size_t n) { return {std::vector<std::size_t>(k, n), {}}; }

    std::size_t k() const { return class_sizes.size(); }
    /// Adds u-v; throws InvalidInputError for intra-class or out-of-range endpoints.
    void add_edge(KVertex u, KVertex v);
    bool adjacent(KVertex u, KVertex v) const;
};

/// {"universe":[ids],"sets":[[ids]]}
SetFamily parse_set_family(std::string_view json_text);
/// {"k":int,"n":int,"edges":[[classA,indexA,classB,indexB]]}, 1-based classes and indices.
KPartiteGraph parse_kpartite_graph(std::string_view json_text);

} // namespace betasat
