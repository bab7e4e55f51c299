#pragma once

#include "betasat/formula.hpp"
#include "betasat/structure.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace betasat {

/// The resolvent of `c` and `d` if they clash on exactly one variable.
std::optional<Clause> resolve(const Clause& c, const Clause& d);

/// DP_x(F). Identity when x does not occur in F.
Formula dp_eliminate(const Formula& f, Var x);

/// Every x-resolvent of two clauses of F is a subset of one of its parents.
/// Vacuously true for a variable that does not occur in F.
bool is_dp_simplicial(const Formula& f, Var x);

/// DP-simplicial variables of F, ascending.
std::vector<Var> dp_simplicial_variables(const Formula& f);

/// Resolution derivation: each entry is an input clause or the resolvent of
/// two earlier entries (0-based indices).
struct DerivationStep {
    Clause clause;
    std::optional<std::pair<std::size_t, std::size_t>> parents;
};

struct ResolutionDerivation {
    std::vector<DerivationStep> steps;
};

/// Checks every step against `f` and `resolve`. With `refutation` set the
/// last clause must also be empty.
bool validate_derivation(const Formula& f, const ResolutionDerivation& d, bool refutation = true);

/// Record of a Davis-Putnam run. Every clause that ever appears gets an id;
/// ids of derived clauses are larger than the ids of their parents, so the id
/// order is a valid derivation order.
class EliminationTrace {
public:
    using ClauseId = std::size_t;

    struct TracedClause {
        Clause clause;
        std::size_t step; // 0 for input clauses, otherwise the 1-based step that added it
        std::optional<std::pair<ClauseId, ClauseId>> parents;
    };

    struct Step {
        Var variable;
        std::vector<ClauseId> removed;
        std::vector<ClauseId> added;
        std::size_t size_before;
        std::size_t size_after;
    };

    explicit EliminationTrace(const Formula& initial);

    /// Eliminates `x` from the current formula and records the step.
    void eliminate(Var x);

    const Formula& initial() const { return initial_; }
    const std::vector<Step>& steps() const { return steps_; }
    const TracedClause& clause(ClauseId id) const { return clauses_.at(id); }
    std::size_t clause_count() const { return clauses_.size(); }
    /// Ids of the current formula, in canonical clause order.
    std::vector<ClauseId> current_ids() const;
    Formula current() const;

private:
    Formula initial_;
    std::vector<TracedClause> clauses_;
    std::vector<std::pair<Clause, ClauseId>> live_; // sorted by clause
    std::vector<Step> steps_;
};

/// Re-applies the recorded steps with dp_eliminate.
Formula replay(const EliminationTrace& trace);

enum class Status { sat, unsat };

const char* to_string(Status s);

struct SolveOptions {
    bool refutation = false;
    bool keep_trace = false;
};

struct Verdict {
    Status status = Status::sat;
    /// Total over var(F); present iff SAT.
    std::optional<Assignment> model;
    std::optional<ResolutionDerivation> refutation;
    std::optional<EliminationTrace> trace;
    EliminationOrdering ordering;
};

/// Decides a beta-acyclic formula: weakly simplicial ordering first, then the
/// Davis-Putnam procedure along it. Throws NotBetaAcyclicError otherwise.
Verdict solve_bac(const Formula& f, const SolveOptions& options = {});

/// Davis-Putnam procedure along `order`, which must list every variable of F
/// exactly once (extra variables are tolerated). Throws NotDpSimplicialError
/// when a step's variable violates the DP-simplicial condition.
Verdict solve_with_ordering(const Formula& f, const EliminationOrdering& order, const SolveOptions& options = {});

/// Greedy recognition under a fixed precedence: always eliminates the first
/// DP-simplicial variable. Variables that vanish as a side effect are
/// appended at the end in precedence order, so the result covers var(F).
std::optional<EliminationOrdering> recognize_dps_under(const Formula& f, const EliminationOrdering& precedence);

/// Model reconstruction for a trace ending in the empty formula. When both
/// values of an eliminated variable work, 0 is chosen.
Assignment extract_model(const Formula& f, const EliminationTrace& trace);

/// Resolution refutation for a trace whose final formula holds the empty clause.
ResolutionDerivation extract_refutation(const Formula& f, const EliminationTrace& trace);

} // namespace betasat
