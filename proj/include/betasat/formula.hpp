#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace betasat {

/// Dense variable id. DIMACS variable k corresponds to id k-1.
using Var = std::uint32_t;

class Lit {
public:
    constexpr Lit() = default;
    constexpr Lit(Var v, bool negated) : code_(2 * v + (negated ? 1u : 0u)) {}

    static constexpr Lit pos(Var v) { return Lit(v, false); }
    static constexpr Lit neg(Var v) { return Lit(v, true); }
    /// From a non-zero DIMACS integer.
    static Lit from_dimacs(int value);

    constexpr Var var() const { return code_ >> 1; }
    constexpr bool negated() const { return (code_ & 1u) != 0; }
    constexpr std::uint32_t code() const { return code_; }
    constexpr Lit operator~() const { return from_code(code_ ^ 1u); }
    int to_dimacs() const { return negated() ? -static_cast<int>(var() + 1) : static_cast<int>(var() + 1); }

    constexpr auto operator<=>(const Lit&) const = default;

private:
    static constexpr Lit from_code(std::uint32_t c) {
        Lit l;
        l.code_ = c;
        return l;
    }
    std::uint32_t code_ = 0;
};

/// A non-tautological set of literals kept sorted by variable id, positive
/// literal before negative.
class Clause {
public:
    Clause() = default;

    /// Canonicalizes `lits`; throws TautologyError if a variable occurs with
    /// both polarities.
    static Clause make(std::vector<Lit> lits);
    /// Trusts the caller: `lits` is already sorted, duplicate- and clash-free.
    static Clause from_canonical(std::vector<Lit> lits);
    static Clause from_dimacs(std::initializer_list<int> lits);

    std::span<const Lit> literals() const { return lits_; }
    auto begin() const { return lits_.begin(); }
    auto end() const { return lits_.end(); }
    std::size_t size() const { return lits_.size(); }
    bool empty() const { return lits_.empty(); }

    bool contains(Lit l) const;
    /// The literal over `v`, if `v` occurs.
    std::optional<Lit> literal_of(Var v) const;
    bool mentions(Var v) const { return literal_of(v).has_value(); }
    std::vector<Var> variables() const;
    bool is_subset_of(const Clause& other) const;
    /// Same literal set minus anything over `v`.
    Clause without(Var v) const;

    std::size_t hash() const;

    bool operator==(const Clause&) const = default;
    auto operator<=>(const Clause&) const = default;

private:
    explicit Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {}
    std::vector<Lit> lits_;
};

Clause make_clause(std::span<const Lit> lits);

struct ClauseHash {
    std::size_t operator()(const Clause& c) const { return c.hash(); }
};

/// Interned variables with optional unique names.
class VariableTable {
public:
    VariableTable() = default;
    /// `count` anonymous variables.
    explicit VariableTable(std::size_t count);
    /// Named variables, ids in order. Throws InvalidInputError on duplicates.
    static VariableTable named(std::span<const std::string> names);

    /// Appends a variable; throws InvalidInputError if the name is taken.
    Var add(std::optional<std::string> name = std::nullopt);

    std::size_t size() const { return names_.size(); }
    const std::optional<std::string>& name(Var v) const { return names_.at(v); }
    /// The name, or "x<id+1>" for anonymous variables.
    std::string display_name(Var v) const;
    std::optional<Var> find(std::string_view name) const;

private:
    std::vector<std::optional<std::string>> names_;
    std::unordered_map<std::string, Var> index_;
};

using VariableTablePtr = std::shared_ptr<const VariableTable>;

/// CNF formula with set semantics. Immutable once built; every reduction
/// returns a fresh formula sharing the variable table.
class Formula {
public:
    Formula();
    Formula(VariableTablePtr table, std::vector<Clause> clauses);
    Formula(VariableTable table, std::vector<Clause> clauses);

    /// Convenience for tests and examples: DIMACS-style integer clauses over an
    /// anonymous table large enough for every mentioned variable (at least
    /// `min_vars`). Throws TautologyError like Clause::make.
    static Formula from_dimacs(const std::vector<std::vector<int>>& clauses, std::size_t min_vars = 0);

    const VariableTable& table() const { return *table_; }
    const VariableTablePtr& table_ptr() const { return table_; }

    std::span<const Clause> clauses() const { return clauses_; }
    std::size_t size() const { return clauses_.size(); }
    bool empty() const { return clauses_.empty(); }
    bool contains(const Clause& c) const;
    bool contains_empty_clause() const { return !clauses_.empty() && clauses_.front().empty(); }

    /// var(F), ascending.
    std::span<const Var> variables() const { return vars_; }
    bool mentions(Var v) const;

    /// A formula over the same table.
    Formula with_clauses(std::vector<Clause> clauses) const { return Formula(table_, std::move(clauses)); }

    /// Compares clause sets only; tables are not compared.
    bool operator==(const Formula& other) const { return clauses_ == other.clauses_; }

private:
    VariableTablePtr table_;
    std::vector<Clause> clauses_;
    std::vector<Var> vars_;
};

/// Partial truth assignment.
class Assignment {
public:
    Assignment() = default;

    void set(Var v, bool value);
    void unset(Var v);
    std::optional<bool> get(Var v) const;
    bool contains(Var v) const { return get(v).has_value(); }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }
    /// var(tau), ascending.
    std::vector<Var> domain() const;

    std::optional<bool> value(Lit l) const;
    bool satisfies(const Clause& c) const;
    bool satisfies(const Formula& f) const;

    bool operator==(const Assignment& other) const;

private:
    std::vector<signed char> values_; // -1 unassigned
    std::size_t count_ = 0;
};

/// F[tau]: drops satisfied clauses, deletes falsified literals.
Formula apply_assignment(const Formula& f, const Assignment& tau);

/// F - X: deletes every literal over a variable of X.
Formula remove_variables(const Formula& f, std::span<const Var> xs);

/// Clause rendered like {x1, ~x2}, using table names.
std::string to_string(const Clause& c, const VariableTable& table);
std::string to_string(const Formula& f);

} // namespace betasat

template <>
struct std::hash<betasat::Clause> {
    std::size_t operator()(const betasat::Clause& c) const { return c.hash(); }
};
