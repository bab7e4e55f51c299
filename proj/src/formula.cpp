#include "betasat/formula.hpp"

#include "betasat/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace betasat {

Lit Lit::from_dimacs(int value) {
    if (value == 0) throw InvalidInputError("0 is not a DIMACS literal");
    const auto v = static_cast<Var>(std::abs(value) - 1);
    return Lit(v, value < 0);
}

// ---------------------------------------------------------------------------
// Clause

Clause Clause::make(std::vector<Lit> lits) {
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (std::size_t i = 1; i < lits.size(); ++i) {
        if (lits[i].var() == lits[i - 1].var())
            throw TautologyError("clause contains both polarities of variable " +
                                 std::to_string(lits[i].var() + 1));
    }
    return Clause(std::move(lits));
}

Clause Clause::from_canonical(std::vector<Lit> lits) {
    assert(std::is_sorted(lits.begin(), lits.end()));
    assert(std::adjacent_find(lits.begin(), lits.end(),
                              [](Lit a, Lit b) { return a.var() == b.var(); }) == lits.end());
    return Clause(std::move(lits));
}

Clause Clause::from_dimacs(std::initializer_list<int> lits) {
    std::vector<Lit> out;
    out.reserve(lits.size());
    for (int v : lits) out.push_back(Lit::from_dimacs(v));
    return make(std::move(out));
}

Clause make_clause(std::span<const Lit> lits) {
    return Clause::make(std::vector<Lit>(lits.begin(), lits.end()));
}

bool Clause::contains(Lit l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
}

std::optional<Lit> Clause::literal_of(Var v) const {
    auto it = std::lower_bound(lits_.begin(), lits_.end(), Lit::pos(v));
    if (it != lits_.end() && it->var() == v) return *it;
    return std::nullopt;
}

std::vector<Var> Clause::variables() const {
    std::vector<Var> out;
    out.reserve(lits_.size());
    for (Lit l : lits_) out.push_back(l.var());
    return out;
}

bool Clause::is_subset_of(const Clause& other) const {
    return std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(), lits_.end());
}

Clause Clause::without(Var v) const {
    std::vector<Lit> out;
    out.reserve(lits_.size());
    for (Lit l : lits_)
        if (l.var() != v) out.push_back(l);
    return Clause(std::move(out));
}

std::size_t Clause::hash() const {
    // FNV-1a over literal codes.
    std::uint64_t h = 1469598103934665603ull;
    for (Lit l : lits_) {
        h ^= l.code() + 1;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// VariableTable

VariableTable::VariableTable(std::size_t count) : names_(count) {}

VariableTable VariableTable::named(std::span<const std::string> names) {
    VariableTable t;
    for (const auto& n : names) t.add(n);
    return t;
}

Var VariableTable::add(std::optional<std::string> name) {
    const auto id = static_cast<Var>(names_.size());
    if (name) {
        if (!index_.emplace(*name, id).second)
            throw InvalidInputError("duplicate variable name '" + *name + "'");
    }
    names_.push_back(std::move(name));
    return id;
}

std::string VariableTable::display_name(Var v) const {
    if (v < names_.size() && names_[v]) return *names_[v];
    return "x" + std::to_string(v + 1);
}

std::optional<Var> VariableTable::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------------------
// Formula

Formula::Formula() : table_(std::make_shared<const VariableTable>()) {}

Formula::Formula(VariableTable table, std::vector<Clause> clauses)
    : Formula(std::make_shared<const VariableTable>(std::move(table)), std::move(clauses)) {}

Formula::Formula(VariableTablePtr table, std::vector<Clause> clauses)
    : table_(std::move(table)), clauses_(std::move(clauses)) {
    if (!table_) table_ = std::make_shared<const VariableTable>();
    std::sort(clauses_.begin(), clauses_.end());
    clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
    for (const auto& c : clauses_) {
        for (Lit l : c) {
            if (l.var() >= table_->size())
                throw InvalidInputError("clause mentions variable " + std::to_string(l.var() + 1) +
                                        " outside the variable table");
            vars_.push_back(l.var());
        }
    }
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

Formula Formula::from_dimacs(const std::vector<std::vector<int>>& clauses, std::size_t min_vars) {
    std::size_t nvars = min_vars;
    std::vector<Clause> out;
    out.reserve(clauses.size());
    for (const auto& c : clauses) {
        std::vector<Lit> lits;
        for (int v : c) {
            lits.push_back(Lit::from_dimacs(v));
            nvars = std::max<std::size_t>(nvars, static_cast<std::size_t>(std::abs(v)));
        }
        out.push_back(Clause::make(std::move(lits)));
    }
    return Formula(VariableTable(nvars), std::move(out));
}

bool Formula::contains(const Clause& c) const {
    return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

bool Formula::mentions(Var v) const {
    return std::binary_search(vars_.begin(), vars_.end(), v);
}

// ---------------------------------------------------------------------------
// Assignment

void Assignment::set(Var v, bool value) {
    if (v >= values_.size()) values_.resize(v + 1, -1);
    if (values_[v] < 0) ++count_;
    values_[v] = value ? 1 : 0;
}

void Assignment::unset(Var v) {
    if (v < values_.size() && values_[v] >= 0) {
        values_[v] = -1;
        --count_;
    }
}

std::optional<bool> Assignment::get(Var v) const {
    if (v >= values_.size() || values_[v] < 0) return std::nullopt;
    return values_[v] == 1;
}

std::vector<Var> Assignment::domain() const {
    std::vector<Var> out;
    for (Var v = 0; v < values_.size(); ++v)
        if (values_[v] >= 0) out.push_back(v);
    return out;
}

std::optional<bool> Assignment::value(Lit l) const {
    auto v = get(l.var());
    if (!v) return std::nullopt;
    return *v != l.negated();
}

bool Assignment::satisfies(const Clause& c) const {
    return std::any_of(c.begin(), c.end(), [&](Lit l) { return value(l) == true; });
}

bool Assignment::satisfies(const Formula& f) const {
    return std::all_of(f.clauses().begin(), f.clauses().end(),
                       [&](const Clause& c) { return satisfies(c); });
}

bool Assignment::operator==(const Assignment& other) const {
    const auto dom = domain();
    if (dom != other.domain()) return false;
    return std::all_of(dom.begin(), dom.end(), [&](Var v) { return get(v) == other.get(v); });
}

// ---------------------------------------------------------------------------
// Reductions

Formula apply_assignment(const Formula& f, const Assignment& tau) {
    std::vector<Clause> out;
    out.reserve(f.size());
    for (const auto& c : f.clauses()) {
        std::vector<Lit> kept;
        bool satisfied = false;
        for (Lit l : c) {
            auto val = tau.value(l);
            if (!val) {
                kept.push_back(l);
            } else if (*val) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied) out.push_back(Clause::from_canonical(std::move(kept)));
    }
    return f.with_clauses(std::move(out));
}

Formula remove_variables(const Formula& f, std::span<const Var> xs) {
    std::vector<Var> drop(xs.begin(), xs.end());
    std::sort(drop.begin(), drop.end());
    std::vector<Clause> out;
    out.reserve(f.size());
    for (const auto& c : f.clauses()) {
        std::vector<Lit> kept;
        for (Lit l : c)
            if (!std::binary_search(drop.begin(), drop.end(), l.var())) kept.push_back(l);
        out.push_back(Clause::from_canonical(std::move(kept)));
    }
    return f.with_clauses(std::move(out));
}

std::string to_string(const Clause& c, const VariableTable& table) {
    std::string s = "{";
    bool first = true;
    for (Lit l : c) {
        if (!first) s += ", ";
        first = false;
        if (l.negated()) s += '~';
        s += table.display_name(l.var());
    }
    return s + "}";
}

std::string to_string(const Formula& f) {
    std::string s = "{";
    bool first = true;
    for (const auto& c : f.clauses()) {
        if (!first) s += ", ";
        first = false;
        s += to_string(c, f.table());
    }
    return s + "}";
}

} // namespace betasat
