#include "doctest.h"

#include "betasat/errors.hpp"
#include "betasat/formula.hpp"
#include "betasat/generators.hpp"
#include "betasat/oracle.hpp"
#include "support.hpp"

#include <algorithm>

using namespace betasat;
using namespace betasat::testing;

TEST_CASE("make_clause") {
    SUBCASE("tautology is rejected") {
        CHECK_THROWS_AS(Clause::from_dimacs({1, -1}), TautologyError);
    }
    SUBCASE("duplicates collapse") {
        CHECK(Clause::from_dimacs({1, -2, 1}) == Clause::from_dimacs({1, -2}));
        CHECK(Clause::from_dimacs({1, -2, 1}).size() == 2);
    }
    SUBCASE("empty clause") {
        const Clause c = Clause::from_dimacs({});
        CHECK(c.empty());
    }
    SUBCASE("canonical order: by variable, positive first") {
        const Clause c = Clause::from_dimacs({-3, 1, 2});
        std::vector<int> got;
        for (Lit l : c) got.push_back(l.to_dimacs());
        CHECK(got == std::vector<int>{1, 2, -3});
    }
}

TEST_CASE("literal complement is an involution") {
    for (Var v = 0; v < 5; ++v) {
        CHECK(~~Lit::pos(v) == Lit::pos(v));
        CHECK(~Lit::pos(v) == Lit::neg(v));
    }
}

TEST_CASE("canonical form ignores permutation") {
    std::vector<Lit> lits{Lit::pos(3), Lit::neg(0), Lit::pos(5), Lit::neg(2)};
    const Clause ref = Clause::make(lits);
    std::sort(lits.begin(), lits.end());
    do {
        CHECK(Clause::make(lits) == ref);
    } while (std::next_permutation(lits.begin(), lits.end()));
}

TEST_CASE("formula has set semantics") {
    const Formula f = Formula::from_dimacs({{1, 2}, {2, 1}, {-1}});
    CHECK(f.size() == 2);
    CHECK(f.variables().size() == 2);
    const Formula g = Formula::from_dimacs({{}, {1}});
    CHECK(g.contains_empty_clause());
}

TEST_CASE("variable table") {
    VariableTable t;
    CHECK(t.add("b'") == 0);
    CHECK(t.add() == 1);
    CHECK_THROWS_AS(t.add("b'"), InvalidInputError);
    CHECK(t.display_name(1) == "x2");
    CHECK(t.find("b'") == Var{0});
    CHECK_FALSE(t.find("nope").has_value());
}

TEST_CASE("apply_assignment") {
    // x = 1, y = 2, z = 3
    const Formula f = Formula::from_dimacs({{1, 2}, {-1, 3}});
    Assignment tau;
    tau.set(0, true);
    CHECK(apply_assignment(f, tau) == Formula::from_dimacs({{3}}));

    Assignment zero;
    zero.set(0, false);
    const Formula unit = Formula::from_dimacs({{1}});
    CHECK(apply_assignment(unit, zero).contains_empty_clause());
    CHECK(apply_assignment(unit, zero).size() == 1);

    CHECK(apply_assignment(f, Assignment{}) == f);
}

TEST_CASE("remove_variables") {
    const Formula f = Formula::from_dimacs({{1, 2}, {-1, 2}});
    CHECK(remove_variables(f, std::vector<Var>{}) == f);
    CHECK(remove_variables(f, std::vector<Var>{0}) == Formula::from_dimacs({{2}}));

    const Formula gap = gen_backdoor_gap(2);
    const auto reduced = remove_variables(gap, std::vector<Var>{var_of(gap, "y1"), var_of(gap, "y2")});
    CHECK(reduced == named_formula(gap, {{"x1", "x2"}, {"z1", "z2"}, {"x1", "x2", "z1", "z2"}}));
}

TEST_CASE("assignment evaluation") {
    Assignment tau;
    tau.set(2, true);
    CHECK(tau.size() == 1);
    CHECK_FALSE(tau.value(Lit::pos(0)).has_value());
    CHECK(tau.value(Lit::neg(2)) == false);
    tau.unset(2);
    CHECK(tau.empty());
}

TEST_CASE("property: |F[tau]| <= |F| and reducts preserve satisfiability") {
    std::mt19937_64 rng(3);
    for (const auto& f : random_corpus(300, 4, 8, 17)) {
        const auto vars = f.variables();
        const bool sat = oracle_sat(f).status == Status::sat;
        // Any subset B of var(F): F is satisfiable iff some assignment over B leaves a satisfiable reduct.
        const std::uint32_t mask = static_cast<std::uint32_t>(rng() % (1u << vars.size()));
        std::vector<Var> b;
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (mask >> i & 1u) b.push_back(vars[i]);
        bool some = false;
        for (std::uint32_t t = 0; t < (1u << b.size()); ++t) {
            Assignment tau;
            for (std::size_t i = 0; i < b.size(); ++i) tau.set(b[i], t >> i & 1u);
            const Formula r = apply_assignment(f, tau);
            CHECK(r.size() <= f.size());
            some = some || oracle_sat(r).status == Status::sat;
        }
        CHECK(some == sat);
    }
}
