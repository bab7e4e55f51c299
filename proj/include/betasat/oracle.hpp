#pragma once

// Brute-force ground truth. Nothing here is used by the polynomial solvers.

#include "betasat/dp.hpp"
#include "betasat/formula.hpp"
#include "betasat/instances.hpp"
#include "betasat/structure.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace betasat {

inline constexpr std::size_t kOracleSatMaxVars = 24;

/// Truth-table satisfiability, enumerating assignments in Gray-code order.
/// Throws TooLargeError when |var(F)| exceeds `max_vars`.
Verdict oracle_sat(const Formula& f, std::size_t max_vars = kOracleSatMaxVars);

enum class Membership { member, non_member, unknown };

const char* to_string(Membership m);

struct DpsMembership {
    Membership status = Membership::unknown;
    std::optional<EliminationOrdering> witness;
    std::uint64_t nodes_explored = 0;
};

/// Exhaustive search over DP-simplicial choices. Formulas reached along
/// different paths are memoized by their canonical clause encoding unless
/// `memoize` is off. Reports `unknown` once `node_budget` expansions are used.
DpsMembership oracle_dps(const Formula& f, std::uint64_t node_budget, bool memoize = true);

struct HittingSet {
    std::size_t size = 0;
    std::vector<Element> witness;
};

inline constexpr std::size_t kHittingSetMaxUniverse = 20;

/// Smallest hitting set, lexicographically smallest among equal sizes.
HittingSet oracle_min_hitting_set(const SetFamily& s);

/// Smallest strong BAC-backdoor of size at most `max_k`, by increasing size
/// then lexicographic order.
std::optional<std::vector<Var>> oracle_min_strong_backdoor(const Formula& f, std::size_t max_k);

} // namespace betasat
