#include "betasat/dp.hpp"

#include "betasat/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace betasat {

namespace {

/// (C ∪ D) \ {x, ~x} for clauses known to clash on x only.
Clause merge_without(const Clause& c, const Clause& d, Var x) {
    std::vector<Lit> out;
    out.reserve(c.size() + d.size());
    std::set_union(c.begin(), c.end(), d.begin(), d.end(), std::back_inserter(out));
    out.erase(std::remove_if(out.begin(), out.end(), [x](Lit l) { return l.var() == x; }), out.end());
    return Clause::from_canonical(std::move(out));
}

/// Second clash between two clauses already clashing on `x`?
bool clashes_elsewhere(const Clause& c, const Clause& d, Var x) {
    auto i = c.begin();
    auto j = d.begin();
    while (i != c.end() && j != d.end()) {
        if (i->var() < j->var()) {
            ++i;
        } else if (j->var() < i->var()) {
            ++j;
        } else {
            if (i->var() != x && *i != *j) return true;
            ++i;
            ++j;
        }
    }
    return false;
}

struct Split {
    std::vector<const Clause*> pos;
    std::vector<const Clause*> neg;
};

Split split_on(const Formula& f, Var x) {
    Split s;
    for (const auto& c : f.clauses()) {
        if (auto l = c.literal_of(x)) (l->negated() ? s.neg : s.pos).push_back(&c);
    }
    return s;
}

} // namespace

std::optional<Clause> resolve(const Clause& c, const Clause& d) {
    std::optional<Var> pivot;
    auto i = c.begin();
    auto j = d.begin();
    while (i != c.end() && j != d.end()) {
        if (i->var() < j->var()) {
            ++i;
        } else if (j->var() < i->var()) {
            ++j;
        } else {
            if (*i != *j) {
                if (pivot) return std::nullopt;
                pivot = i->var();
            }
            ++i;
            ++j;
        }
    }
    if (!pivot) return std::nullopt;
    return merge_without(c, d, *pivot);
}

Formula dp_eliminate(const Formula& f, Var x) {
    if (!f.mentions(x)) return f;
    const auto s = split_on(f, x);
    std::vector<Clause> out;
    out.reserve(f.size());
    for (const auto& c : f.clauses())
        if (!c.mentions(x)) out.push_back(c);
    for (const Clause* p : s.pos)
        for (const Clause* n : s.neg)
            if (!clashes_elsewhere(*p, *n, x)) out.push_back(merge_without(*p, *n, x));
    return f.with_clauses(std::move(out));
}

bool is_dp_simplicial(const Formula& f, Var x) {
    const auto s = split_on(f, x);
    for (const Clause* p : s.pos) {
        const Clause p_rest = p->without(x);
        for (const Clause* n : s.neg) {
            if (clashes_elsewhere(*p, *n, x)) continue;
            const Clause n_rest = n->without(x);
            // The resolvent is p_rest ∪ n_rest; it fits inside a parent iff
            // one remainder contains the other.
            if (!n_rest.is_subset_of(p_rest) && !p_rest.is_subset_of(n_rest)) return false;
        }
    }
    return true;
}

std::vector<Var> dp_simplicial_variables(const Formula& f) {
    std::vector<Var> out;
    for (Var x : f.variables())
        if (is_dp_simplicial(f, x)) out.push_back(x);
    return out;
}

bool validate_derivation(const Formula& f, const ResolutionDerivation& d, bool refutation) {
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
        const auto& step = d.steps[i];
        if (!step.parents) {
            if (!f.contains(step.clause)) return false;
            continue;
        }
        auto [a, b] = *step.parents;
        if (a >= i || b >= i) return false;
        auto r = resolve(d.steps[a].clause, d.steps[b].clause);
        if (!r || *r != step.clause) return false;
    }
    if (refutation) return !d.steps.empty() && d.steps.back().clause.empty();
    return true;
}

// ---------------------------------------------------------------------------
// EliminationTrace

EliminationTrace::EliminationTrace(const Formula& initial) : initial_(initial) {
    for (const auto& c : initial.clauses()) {
        live_.emplace_back(c, clauses_.size());
        clauses_.push_back(TracedClause{c, 0, std::nullopt});
    }
}

void EliminationTrace::eliminate(Var x) {
    Step step{x, {}, {}, live_.size(), 0};
    std::vector<std::pair<Clause, ClauseId>> kept;
    std::vector<ClauseId> pos;
    std::vector<ClauseId> neg;
    for (auto& [c, id] : live_) {
        if (auto l = c.literal_of(x)) {
            (l->negated() ? neg : pos).push_back(id);
            step.removed.push_back(id);
        } else {
            kept.emplace_back(c, id);
        }
    }

    const auto step_no = steps_.size() + 1;
    std::vector<std::pair<Clause, ClauseId>> fresh;
    std::unordered_set<Clause, ClauseHash> fresh_set;
    auto present = [&](const Clause& c) {
        auto less = [](const auto& e, const Clause& k) { return e.first < k; };
        auto it = std::lower_bound(kept.begin(), kept.end(), c, less);
        if (it != kept.end() && it->first == c) return true;
        return fresh_set.count(c) > 0;
    };
    for (ClauseId p : pos) {
        for (ClauseId n : neg) {
            const Clause& pc = clauses_[p].clause;
            const Clause& nc = clauses_[n].clause;
            if (clashes_elsewhere(pc, nc, x)) continue;
            Clause r = merge_without(pc, nc, x);
            if (present(r)) continue;
            const ClauseId id = clauses_.size();
            clauses_.push_back(TracedClause{r, step_no, std::make_pair(p, n)});
            fresh_set.insert(r);
            fresh.emplace_back(std::move(r), id);
            step.added.push_back(id);
        }
    }

    kept.insert(kept.end(), fresh.begin(), fresh.end());
    std::sort(kept.begin(), kept.end());
    live_ = std::move(kept);
    step.size_after = live_.size();
    steps_.push_back(std::move(step));
}

std::vector<EliminationTrace::ClauseId> EliminationTrace::current_ids() const {
    std::vector<ClauseId> ids;
    ids.reserve(live_.size());
    for (const auto& e : live_) ids.push_back(e.second);
    return ids;
}

Formula EliminationTrace::current() const {
    std::vector<Clause> cs;
    cs.reserve(live_.size());
    for (const auto& e : live_) cs.push_back(e.first);
    return initial_.with_clauses(std::move(cs));
}

Formula replay(const EliminationTrace& trace) {
    Formula f = trace.initial();
    for (const auto& s : trace.steps()) f = dp_eliminate(f, s.variable);
    return f;
}

// ---------------------------------------------------------------------------
// Solvers

const char* to_string(Status s) {
    return s == Status::sat ? "SAT" : "UNSAT";
}

namespace {

void check_ordering(const Formula& f, const EliminationOrdering& order) {
    std::unordered_set<Var> seen;
    for (Var v : order) {
        if (!seen.insert(v).second)
            throw InvalidInputError("elimination ordering repeats variable " + f.table().display_name(v));
    }
    for (Var v : f.variables()) {
        if (!seen.count(v))
            throw InvalidInputError("elimination ordering misses variable " + f.table().display_name(v));
    }
}

Verdict finish(const Formula& f, EliminationTrace trace, EliminationOrdering order, const SolveOptions& options) {
    Verdict v;
    v.ordering = std::move(order);
    const Formula last = trace.current();
    if (last.contains_empty_clause()) {
        v.status = Status::unsat;
        if (options.refutation) v.refutation = extract_refutation(f, trace);
    } else {
        v.status = Status::sat;
        v.model = extract_model(f, trace);
    }
    if (options.keep_trace) v.trace = std::move(trace);
    return v;
}

void assert_not_grown(const EliminationTrace& trace) {
    const auto& s = trace.steps().back();
    if (s.size_after > s.size_before)
        throw std::logic_error("clause count grew while eliminating a DP-simplicial variable");
}

} // namespace

Verdict solve_bac(const Formula& f, const SolveOptions& options) {
    auto order = beta_elimination_ordering(f);
    if (!order) throw NotBetaAcyclicError();
    EliminationTrace trace(f);
    for (Var x : *order) {
        trace.eliminate(x);
        assert_not_grown(trace);
    }
    return finish(f, std::move(trace), std::move(*order), options);
}

Verdict solve_with_ordering(const Formula& f, const EliminationOrdering& order, const SolveOptions& options) {
    check_ordering(f, order);
    EliminationTrace trace(f);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Var x = order[i];
        if (!is_dp_simplicial(trace.current(), x))
            throw NotDpSimplicialError(i + 1, x, f.table().display_name(x));
        trace.eliminate(x);
        assert_not_grown(trace);
    }
    return finish(f, std::move(trace), order, options);
}

std::optional<EliminationOrdering> recognize_dps_under(const Formula& f, const EliminationOrdering& precedence) {
    check_ordering(f, precedence);
    Formula cur = f;
    EliminationOrdering realized;
    while (!cur.variables().empty()) {
        std::optional<Var> pick;
        for (Var x : precedence) {
            if (cur.mentions(x) && is_dp_simplicial(cur, x)) {
                pick = x;
                break;
            }
        }
        if (!pick) return std::nullopt;
        Formula next = dp_eliminate(cur, *pick);
        if (next.size() > cur.size())
            throw std::logic_error("clause count grew while eliminating a DP-simplicial variable");
        realized.push_back(*pick);
        cur = std::move(next);
    }
    for (Var x : precedence) {
        if (f.mentions(x) && std::find(realized.begin(), realized.end(), x) == realized.end())
            realized.push_back(x);
    }
    return realized;
}

// ---------------------------------------------------------------------------
// Certificates

Assignment extract_model(const Formula& f, const EliminationTrace& trace) {
    if (!(trace.initial() == f)) throw InvalidTraceError("trace was recorded for a different formula");
    if (!trace.current().empty())
        throw InvalidTraceError("trace does not end in the empty formula");
    Assignment tau;
    const auto& steps = trace.steps();
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        const Var x = it->variable;
        // Variables that vanished in this step are free; fix them first.
        for (auto id : it->removed)
            for (Lit l : trace.clause(id).clause)
                if (l.var() != x && !tau.contains(l.var())) tau.set(l.var(), false);
        auto works = [&](bool value) {
            tau.set(x, value);
            for (auto id : it->removed)
                if (!tau.satisfies(trace.clause(id).clause)) return false;
            return true;
        };
        if (!works(false) && !works(true))
            throw InvalidTraceError("no value of " + f.table().display_name(x) + " satisfies its removed clauses");
    }
    for (Var v : f.variables())
        if (!tau.contains(v)) tau.set(v, false);
    return tau;
}

ResolutionDerivation extract_refutation(const Formula& f, const EliminationTrace& trace) {
    if (!(trace.initial() == f)) throw InvalidTraceError("trace was recorded for a different formula");
    std::optional<EliminationTrace::ClauseId> root;
    for (auto id : trace.current_ids())
        if (trace.clause(id).clause.empty()) root = id;
    if (!root) throw InvalidTraceError("trace does not end with the empty clause");

    std::vector<bool> needed(trace.clause_count(), false);
    std::vector<EliminationTrace::ClauseId> stack{*root};
    while (!stack.empty()) {
        auto id = stack.back();
        stack.pop_back();
        if (needed[id]) continue;
        needed[id] = true;
        if (auto p = trace.clause(id).parents) {
            stack.push_back(p->first);
            stack.push_back(p->second);
        }
    }

    ResolutionDerivation d;
    std::vector<std::size_t> index(trace.clause_count(), 0);
    for (EliminationTrace::ClauseId id = 0; id < trace.clause_count(); ++id) {
        if (!needed[id]) continue;
        const auto& tc = trace.clause(id);
        index[id] = d.steps.size();
        DerivationStep step{tc.clause, std::nullopt};
        if (tc.parents) step.parents = std::make_pair(index[tc.parents->first], index[tc.parents->second]);
        d.steps.push_back(std::move(step));
    }
    return d;
}

} // namespace betasat
