#include "doctest.h"

#include "betasat/errors.hpp"
#include "betasat/generators.hpp"
#include "betasat/io.hpp"
#include "support.hpp"

using namespace betasat;
using namespace betasat::testing;

TEST_CASE("parse dimacs") {
    const Formula f = parse_formula("p cnf 3 2\n1 -2 0\n2 -3 0\n", Format::dimacs);
    CHECK(f == Formula::from_dimacs({{1, -2}, {2, -3}}));

    const Formula dup = parse_formula("p cnf 1 2\n1 0\n1 0\n", Format::dimacs);
    CHECK(dup.size() == 1);

    CHECK_THROWS_AS(parse_formula("p cnf 1 1\n1 -1 0\n", Format::dimacs), TautologyError);
}

TEST_CASE("parse dimacs comments and multi-line clauses") {
    const Formula f = parse_formula("c hello\np cnf 3 1\n1 2\n 3 0\n", Format::dimacs);
    CHECK(f == Formula::from_dimacs({{1, 2, 3}}));
}

TEST_CASE("dimacs errors carry the line") {
    try {
        parse_formula("p cnf 2 1\n1 5 0\n", Format::dimacs);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_formula("1 2 0\n", Format::dimacs), ParseError);
    CHECK_THROWS_AS(parse_formula("p cnf 2 1\n1 2\n", Format::dimacs), ParseError);
    CHECK_THROWS_AS(parse_formula("p cnf 2 2\n1 2 0\n", Format::dimacs), ParseError);
    CHECK_THROWS_AS(parse_formula("p cnf 2 1\n1 x 0\n", Format::dimacs), ParseError);
}

TEST_CASE("dropping tautologies warns") {
    ParseOptions opts;
    opts.drop_tautologies = true;
    int warnings = 0;
    opts.on_warning = [&](const std::string&) { ++warnings; };
    const Formula f = parse_formula("p cnf 2 2\n1 -1 0\n2 0\n", Format::dimacs, opts);
    CHECK(f.size() == 1);
    CHECK(warnings == 1);
}

TEST_CASE("write dimacs") {
    CHECK(write_formula(Formula(), Format::dimacs) == "p cnf 0 0\n");
    CHECK(write_formula(Formula::from_dimacs({{1}}), Format::dimacs) == "p cnf 1 1\n1 0\n");
}

TEST_CASE("named-json round trip keeps names") {
    const Formula f = fixture_example();
    const Formula g = parse_formula(write_formula(f, Format::named_json), Format::named_json);
    CHECK(g == f);
    for (const char* name : {"y", "b", "b'", "b*", "c", "z"}) CHECK(g.table().find(name) == f.table().find(name));
}

TEST_CASE("named-json errors") {
    CHECK_THROWS_AS(parse_formula("{", Format::named_json), ParseError);
    CHECK_THROWS_AS(parse_formula(R"({"variables":["a"],"clauses":[[{"var":3,"neg":false}]]})", Format::named_json),
                    ParseError);
    CHECK_THROWS_AS(parse_formula(R"({"variables":["a","a"],"clauses":[]})", Format::named_json), Error);
    CHECK_THROWS_AS(parse_formula(R"({"variables":["a"],"clauses":[[{"var":0,"neg":false},{"var":0,"neg":true}]]})",
                                  Format::named_json),
                    TautologyError);
}

TEST_CASE("format sniffing") {
    CHECK(sniff_format("  {\"variables\":[]}") == Format::named_json);
    CHECK(sniff_format("p cnf 0 0\n") == Format::dimacs);
    CHECK(format_from_string("named-json") == Format::named_json);
    CHECK_FALSE(format_from_string("xml").has_value());
}

TEST_CASE("property: round trips are the identity") {
    for (const auto& f : random_corpus(200, 9, 12, 41)) {
        CHECK(parse_formula(write_formula(f, Format::dimacs), Format::dimacs) == f);
        CHECK(parse_formula(write_formula(f, Format::named_json), Format::named_json) == f);
    }
    for (const auto& f : family_corpus()) CHECK(parse_formula(write_formula(f, Format::named_json), Format::named_json) == f);
}
