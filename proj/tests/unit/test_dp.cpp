#include "doctest.h"

#include "betasat/dp.hpp"
#include "betasat/errors.hpp"
#include "betasat/generators.hpp"
#include "betasat/oracle.hpp"
#include "support.hpp"

#include <algorithm>

using namespace betasat;
using namespace betasat::testing;

TEST_CASE("resolve") {
    // x = 1, a = 2, b = 3
    CHECK(resolve(Clause::from_dimacs({1, 2}), Clause::from_dimacs({-1, 3})) == Clause::from_dimacs({2, 3}));
    CHECK_FALSE(resolve(Clause::from_dimacs({1, 2}), Clause::from_dimacs({-1, -2})).has_value());
    CHECK_FALSE(resolve(Clause::from_dimacs({2, 3}), Clause::from_dimacs({2, 1})).has_value());
    CHECK(resolve(Clause::from_dimacs({1}), Clause::from_dimacs({-1})) == Clause::from_dimacs({}));
}

TEST_CASE("dp_eliminate on the worked example") {
    const Formula f = fixture_example();
    const Formula dy = dp_eliminate(f, var_of(f, "y"));
    CHECK(dy == named_formula(f, {{"~b", "b'", "z"},
                                  {"~b"},
                                  {"~b", "b*", "~z"},
                                  {"~b", "b'"},
                                  {"~b", "z"},
                                  {"~b", "~z"},
                                  {"b'", "b*", "c"},
                                  {"b'", "b*", "~c"},
                                  {"b'", "~b*"},
                                  {"~b'", "b*"}}));
    const Formula dyb = dp_eliminate(dy, var_of(f, "b"));
    CHECK(dyb == named_formula(f, {{"b'", "b*", "c"}, {"b'", "b*", "~c"}, {"b'", "~b*"}, {"~b'", "b*"}}));

    const Formula dz = dp_eliminate(f, var_of(f, "z"));
    CHECK(dz == named_formula(f, {{"y", "b", "b*", "c"},
                                  {"y", "~b"},
                                  {"y", "~b", "b'"},
                                  {"~y", "b", "b'", "~c"},
                                  {"~y", "~b"},
                                  {"~y", "~b", "b*"},
                                  {"~b"},
                                  {"~b", "b'"},
                                  {"b'", "b*", "c"},
                                  {"b'", "b*", "~c"},
                                  {"b'", "~b*"},
                                  {"~b'", "b*"}}));
}

TEST_CASE("dp_eliminate edge cases") {
    const Formula f = Formula::from_dimacs({{1}, {-1}});
    const Formula g = dp_eliminate(f, 0);
    CHECK(g.size() == 1);
    CHECK(g.contains_empty_clause());
    const Formula h = Formula::from_dimacs({{1, 2}}, 3);
    CHECK(dp_eliminate(h, 2) == h);
}

TEST_CASE("is_dp_simplicial") {
    const Formula f = fixture_example();
    CHECK(is_dp_simplicial(f, var_of(f, "z")));
    CHECK(is_dp_simplicial(f, var_of(f, "y")));
    CHECK(dp_simplicial_variables(f) == named_order(f, {"y", "z"}));
    const Formula dz = dp_eliminate(f, var_of(f, "z"));
    for (Var v : dz.variables()) CHECK_FALSE(is_dp_simplicial(dz, v));
    CHECK_FALSE(is_dp_simplicial(gen_family(Family::fc, 3), 0));
}

TEST_CASE("solve_bac") {
    const Formula fs4 = gen_family(Family::fs, 4);
    const Verdict v = solve_bac(fs4);
    CHECK(v.status == Status::sat);
    REQUIRE(v.model.has_value());
    CHECK(v.model->satisfies(fs4));
    CHECK(v.model->domain() == std::vector<Var>{0, 1, 2, 3});

    CHECK(solve_bac(gen_family(Family::fa, 2)).status == Status::unsat);
    CHECK_THROWS_AS(solve_bac(gen_family(Family::fc, 3)), NotBetaAcyclicError);

    const Verdict empty = solve_bac(Formula());
    CHECK(empty.status == Status::sat);
    CHECK(empty.model->empty());
    CHECK(solve_bac(Formula::from_dimacs({{}})).status == Status::unsat);
}

TEST_CASE("solve_with_ordering") {
    const Formula f = fixture_example();
    const Verdict v = solve_with_ordering(f, named_order(f, {"y", "b", "b'", "b*", "c", "z"}));
    CHECK(v.status == Status::sat);
    CHECK(v.model->satisfies(f));
    CHECK(v.model->domain().size() == 6);

    try {
        solve_with_ordering(f, named_order(f, {"z", "y", "b", "b'", "b*", "c"}));
        FAIL("expected NotDpSimplicialError");
    } catch (const NotDpSimplicialError& e) {
        CHECK(e.step() == 2);
        CHECK(e.variable() == var_of(f, "y"));
    }

    CHECK(solve_with_ordering(gen_family(Family::fa, 2), {0, 1}).status == Status::unsat);
    CHECK_THROWS_AS(solve_with_ordering(f, named_order(f, {"y", "b"})), InvalidInputError);
    CHECK_THROWS_AS(solve_with_ordering(gen_family(Family::fa, 2), {0, 0, 1}), InvalidInputError);
}

TEST_CASE("recognize_dps_under") {
    const Formula f = fixture_example();
    const auto got = recognize_dps_under(f, named_order(f, {"y", "b", "b'", "b*", "c", "z"}));
    CHECK(got == named_order(f, {"y", "b", "b'", "b*", "c", "z"}));
    CHECK_FALSE(recognize_dps_under(f, named_order(f, {"z", "y", "b", "b'", "b*", "c"})).has_value());
    CHECK_FALSE(recognize_dps_under(f, named_order(f, {"z", "c", "b*", "b'", "b", "y"})).has_value());
    const Formula fc = gen_family(Family::fc, 3);
    CHECK_FALSE(recognize_dps_under(fc, {0, 1, 2}).has_value());
    CHECK_FALSE(recognize_dps_under(fc, {2, 1, 0}).has_value());
}

TEST_CASE("extract_model") {
    const Formula unit = Formula::from_dimacs({{1}});
    EliminationTrace t(unit);
    t.eliminate(0);
    const Assignment m = extract_model(unit, t);
    CHECK(m.get(0) == true);

    const Formula f = fixture_example();
    EliminationTrace tf(f);
    for (Var v : named_order(f, {"y", "b", "b'", "b*", "c", "z"})) tf.eliminate(v);
    const Assignment mf = extract_model(f, tf);
    CHECK(mf.domain().size() == 6);
    CHECK(mf.satisfies(f));

    EliminationTrace te{Formula()};
    CHECK(extract_model(Formula(), te).empty());

    const Formula unsat = Formula::from_dimacs({{1}, {-1}});
    EliminationTrace tu(unsat);
    tu.eliminate(0);
    CHECK_THROWS_AS(extract_model(unsat, tu), InvalidTraceError);
}

TEST_CASE("extract_refutation") {
    const Formula f = Formula::from_dimacs({{1}, {-1}});
    EliminationTrace t(f);
    t.eliminate(0);
    const ResolutionDerivation d = extract_refutation(f, t);
    REQUIRE(d.steps.size() == 3);
    CHECK(d.steps[0].clause == Clause::from_dimacs({1}));
    CHECK(d.steps[1].clause == Clause::from_dimacs({-1}));
    CHECK(d.steps[2].clause.empty());
    CHECK(d.steps[2].parents == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(validate_derivation(f, d));

    const Formula fa2 = gen_family(Family::fa, 2);
    const Verdict v = solve_bac(fa2, SolveOptions{true, false});
    REQUIRE(v.refutation.has_value());
    CHECK(validate_derivation(fa2, *v.refutation));

    const Formula sat = Formula::from_dimacs({{1}});
    EliminationTrace ts(sat);
    ts.eliminate(0);
    CHECK_THROWS_AS(extract_refutation(sat, ts), InvalidTraceError);
}

TEST_CASE("validate_derivation rejects bad steps") {
    const Formula f = Formula::from_dimacs({{1}, {-1}});
    ResolutionDerivation d;
    d.steps.push_back({Clause::from_dimacs({1}), std::nullopt});
    d.steps.push_back({Clause::from_dimacs({}), std::nullopt});
    CHECK_FALSE(validate_derivation(f, d));
    d.steps[1].parents = std::pair<std::size_t, std::size_t>{0, 0};
    CHECK_FALSE(validate_derivation(f, d));
    ResolutionDerivation not_input;
    not_input.steps.push_back({Clause::from_dimacs({2}), std::nullopt});
    CHECK_FALSE(validate_derivation(f, not_input, false));
}

TEST_CASE("trace replay and parents") {
    for (const auto& f : random_corpus(150, 8, 10, 64)) {
        const auto order = beta_elimination_ordering(f);
        if (!order) continue;
        EliminationTrace t(f);
        for (Var x : *order) t.eliminate(x);
        CHECK(replay(t) == t.current());
        for (std::size_t id = 0; id < t.clause_count(); ++id) {
            const auto& c = t.clause(id);
            if (!c.parents) continue;
            CHECK(c.parents->first < id);
            CHECK(c.parents->second < id);
            CHECK(resolve(t.clause(c.parents->first).clause, t.clause(c.parents->second).clause) == c.clause);
        }
    }
}

TEST_CASE("property: weakly simplicial implies DP-simplicial") {
    auto corpus = random_corpus(400, 8, 10, 2);
    for (auto& f : family_corpus()) corpus.push_back(std::move(f));
    for (const auto& f : corpus)
        for (Var x : weakly_simplicial_variables(f)) CHECK(is_dp_simplicial(f, x));
}

TEST_CASE("property: DP-simplicial elimination never grows the formula") {
    for (const auto& f : random_corpus(400, 8, 10, 19))
        for (Var x : dp_simplicial_variables(f)) CHECK(dp_eliminate(f, x).size() <= f.size());
}

TEST_CASE("property: solver verdicts are certified and match the truth table") {
    for (const auto& f : random_corpus(500, 10, 10, 23)) {
        if (!is_beta_acyclic(f)) continue;
        const Verdict v = solve_bac(f, SolveOptions{true, false});
        CHECK(v.status == oracle_sat(f).status);
        if (v.status == Status::sat) {
            CHECK(v.model->satisfies(f));
        } else {
            CHECK(validate_derivation(f, *v.refutation));
        }
    }
}

TEST_CASE("property: recognized orderings replay") {
    for (const auto& f : random_corpus(300, 7, 9, 90)) {
        EliminationOrdering prec(f.variables().begin(), f.variables().end());
        std::reverse(prec.begin(), prec.end());
        const auto order = recognize_dps_under(f, prec);
        if (!order) continue;
        const Verdict v = solve_with_ordering(f, *order, SolveOptions{true, false});
        CHECK(v.status == oracle_sat(f).status);
    }
}
