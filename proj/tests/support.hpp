#pragma once

// Shared fixtures for the test binaries.

#include "betasat/dp.hpp"
#include "betasat/formula.hpp"
#include "betasat/generators.hpp"
#include "betasat/instances.hpp"

#include <random>
#include <string>
#include <vector>

namespace betasat::testing {

inline Var var_of(const Formula& f, const std::string& name) {
    auto v = f.table().find(name);
    if (!v) throw std::runtime_error("no variable " + name);
    return *v;
}

/// Clause from names, "~" marking a negative literal.
inline Clause named_clause(const Formula& f, std::initializer_list<std::string> lits) {
    std::vector<Lit> out;
    for (const auto& s : lits) {
        const bool neg = !s.empty() && s[0] == '~';
        out.emplace_back(var_of(f, neg ? s.substr(1) : s), neg);
    }
    return Clause::make(std::move(out));
}

inline Formula named_formula(const Formula& like, std::initializer_list<std::initializer_list<std::string>> clauses) {
    std::vector<Clause> out;
    for (const auto& c : clauses) out.push_back(named_clause(like, c));
    return like.with_clauses(std::move(out));
}

inline EliminationOrdering named_order(const Formula& f, std::initializer_list<std::string> names) {
    EliminationOrdering out;
    for (const auto& n : names) out.push_back(var_of(f, n));
    return out;
}

/// Every non-empty, non-tautological clause over the first `n` variables.
inline std::vector<Clause> all_clauses(std::size_t n) {
    std::vector<Clause> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 1; code < total; ++code) {
        std::vector<Lit> lits;
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i, c /= 3) {
            if (c % 3 == 1) lits.push_back(Lit::pos(static_cast<Var>(i)));
            if (c % 3 == 2) lits.push_back(Lit::neg(static_cast<Var>(i)));
        }
        out.push_back(Clause::make(std::move(lits)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Every formula with 1..max_clauses distinct clauses over n variables.
inline std::vector<Formula> all_formulas(std::size_t n, std::size_t max_clauses) {
    const auto pool = all_clauses(n);
    auto table = std::make_shared<const VariableTable>(n);
    std::vector<Formula> out;
    std::vector<Clause> pick;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!pick.empty()) out.emplace_back(table, pick);
        if (pick.size() == max_clauses) return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            pick.push_back(pool[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Small random formulas used across property tests.
inline std::vector<Formula> random_corpus(std::size_t count, std::size_t max_vars, std::size_t max_clauses,
                                          std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Formula> out;
    for (std::size_t i = 0; i < count; ++i) {
        RandomProfile p;
        p.vars = 1 + rng() % max_vars;
        p.clauses = 1 + rng() % max_clauses;
        p.width = 1 + rng() % 4;
        p.seed = rng();
        out.push_back(gen_random(p));
    }
    return out;
}

/// Families at small sizes plus the worked example.
inline std::vector<Formula> family_corpus() {
    std::vector<Formula> out;
    for (std::size_t n = 1; n <= 6; ++n) {
        out.push_back(gen_family(Family::fa, n));
        out.push_back(gen_family(Family::fs, n));
    }
    for (std::size_t n = 3; n <= 5; ++n) {
        out.push_back(gen_family(Family::fc, n));
        out.push_back(gen_family(Family::fac, n));
    }
    out.push_back(fixture_example());
    for (std::size_t p = 1; p <= 3; ++p) out.push_back(gen_backdoor_gap(p));
    return out;
}

inline SetFamily random_set_family(std::mt19937_64& rng, std::size_t max_universe, std::size_t max_sets) {
    const std::size_t u = 1 + rng() % max_universe;
    const std::size_t m = 1 + rng() % max_sets;
    std::vector<std::vector<Element>> sets;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Element> s;
        while (s.empty())
            for (Element e = 1; e <= u; ++e)
                if (rng() & 1u) s.push_back(e);
        sets.push_back(std::move(s));
    }
    return SetFamily::make(std::move(sets));
}

inline KPartiteGraph random_kpartite(std::mt19937_64& rng, std::size_t k, std::size_t n, double p) {
    auto g = KPartiteGraph::balanced(k, n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (coin(rng) < p) g.add_edge({a, i}, {b, j});
    return g;
}

/// One vertex per class, pairwise adjacent, by brute force over n^k tuples.
inline bool has_partitioned_clique(const KPartiteGraph& g) {
    const std::size_t k = g.k();
    const std::size_t n = g.class_sizes.front();
    std::vector<std::size_t> pick(k, 0);
    while (true) {
        bool ok = true;
        for (std::size_t a = 0; a < k && ok; ++a)
            for (std::size_t b = a + 1; b < k && ok; ++b) ok = g.adjacent({a, pick[a]}, {b, pick[b]});
        if (ok) return true;
        std::size_t i = 0;
        while (i < k && ++pick[i] == n) pick[i++] = 0;
        if (i == k) return false;
    }
}

} // namespace betasat::testing
