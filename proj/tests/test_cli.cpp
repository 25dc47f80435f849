#include <doctest.h>

#include <sstream>

#include "commands.hpp"
#include "spec_parser.hpp"
#include "support/fixtures.hpp"

using namespace qiet;
using namespace qiet::cli;
using namespace qiet::testing;

TEST_CASE("expression grammar") {
    CHECK(parse_expression("(3-sqrt(5))/2", 5) == qn(3, -1, 2, 5));
    CHECK(parse_expression("1-2*((3-sqrt(5))/2)", 5) == qn(-2, 1, 1, 5));  // sqrt(5)-2
    CHECK(parse_expression("  7 ", 5) == QuadNum::integer(7, 5));
    CHECK(parse_expression("-sqrt(2)", 2) == -QuadNum::sqrt_d(2));
    CHECK(parse_expression("2*3/4", 5) == QuadNum::rational(3, 2, 5));
    CHECK(parse_expression("((((1))))", 7) == QuadNum::integer(1, 7));
}

TEST_CASE("expression errors carry positions") {
    CHECK_THROWS_AS(parse_expression("sqrt(6)", 5), DiscriminantMismatch);
    CHECK_THROWS_AS(parse_expression("1+", 5), ParseError);
    CHECK_THROWS_AS(parse_expression("(1", 5), ParseError);
    CHECK_THROWS_AS(parse_expression("foo(2)", 5), ParseError);
    CHECK_THROWS_AS(parse_expression("1/0", 5), ParseError);
    CHECK_THROWS_AS(parse_expression("1 2", 5), ParseError);
    try {
        parse_expression("1 +", 3, 4, 10);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
        CHECK(e.column >= 10);
    }
}

TEST_CASE("text spec parsing builds the golden rotation") {
    std::string text =
        "# golden rotation\n"
        "d = 5\n"
        "perm = 2 1\n"
        "lengths = 1 - (3-sqrt(5))/2, (3-sqrt(5))/2\n"
        "left = 0\n";
    Iet t = build_iet(parse_spec(text));
    CHECK(t == golden_iet());
}

TEST_CASE("left defaults to zero and comments are skipped") {
    Iet t = build_iet(parse_spec("d = 2\nperm = 2 1\nlengths = 2-sqrt(2), sqrt(2)-1\n"));
    CHECK(t == sqrt2_iet());
}

TEST_CASE("json spec parsing") {
    std::string text =
        R"({"d": 5, "perm": [2, 3, 1],)"
        R"( "lengths": ["1-2*((3-sqrt(5))/2)", "(3-sqrt(5))/2", "(3-sqrt(5))/2"]})";
    Iet t = build_iet(parse_spec(text));
    CHECK(t == keane_iet());
    CHECK_THROWS_AS(parse_spec("{\"d\": 5"), ParseError);
    CHECK_THROWS_AS(parse_spec(R"({"d": 5, "perm": [2,1]})"), ParseError);
}

TEST_CASE("spec errors") {
    CHECK_THROWS_AS(parse_spec("perm = 2 1\nlengths = 1, 1\n"), ParseError);     // missing d
    CHECK_THROWS_AS(parse_spec("d = 5\nd = 3\nperm = 1\nlengths = 1\n"), ParseError);
    CHECK_THROWS_AS(parse_spec("d = 5\nwat = 1\nperm = 1\nlengths = 1\n"), ParseError);
    CHECK_THROWS_AS(parse_spec("d = 5\nperm = 2 1\nlengths = sqrt(6), 1\n"),
                    DiscriminantMismatch);
    CHECK_THROWS_AS(build_iet(parse_spec("d = 5\nperm = 2 1\nlengths = 0, 1\n")),
                    NonPositiveLength);
    CHECK_THROWS_AS(build_iet(parse_spec("d = 5\nperm = 2 2\nlengths = 1, 1\n")),
                    NonBijectivePermutation);
}

TEST_CASE("rendered transformations parse back to equal values") {
    for (const Iet& t : regular_fixtures()) {
        CHECK(build_iet(parse_spec(render_iet(t))) == t);
    }
    std::mt19937_64 rng(7701);
    for (int i = 0; i < 200; ++i) {
        Iet t = random_iet(rng, random_d(rng), 2 + static_cast<int>(rng() % 3));
        Iet back = build_iet(parse_spec(render_iet(t)));
        CHECK(back == t);
    }
}

TEST_CASE("word parsing") {
    CHECK(parse_word("") == InductionWord{});
    CHECK(parse_word("psi") == InductionWord{Letter::Psi});
    CHECK(parse_word("psi,phi") == InductionWord{Letter::Psi, Letter::Phi});
    CHECK(parse_word(" phi  psi ") == InductionWord{Letter::Phi, Letter::Psi});
    CHECK_THROWS_AS(parse_word("psy"), ParseError);
}

TEST_CASE("command output is deterministic") {
    Budgets budgets;
    std::ostringstream a, b;
    cmd_graph(sqrt3_iet(), "json", budgets, a);
    cmd_graph(sqrt3_iet(), "json", budgets, b);
    CHECK(a.str() == b.str());
    CHECK(!a.str().empty());

    std::ostringstream c, d_, diag;
    cmd_admissible(golden_iet(), 3, budgets, c, diag);
    cmd_admissible(golden_iet(), 3, budgets, d_, diag);
    CHECK(c.str() == d_.str());
    CHECK(diag.str().empty());
}

TEST_CASE("check command reports the Keane witness with exit code 2") {
    std::ostringstream out;
    CHECK(cmd_check(keane_iet(), 10, out) == 2);
    CHECK(out.str() == "connection found: T^1(gamma_2) = gamma_3\n");
    std::ostringstream clean;
    CHECK(cmd_check(golden_iet(), 1000, clean) == 0);
    CHECK(clean.str() == "no connection found up to depth 1000\n");
}

TEST_CASE("cf command prints the bracketed expansion") {
    std::ostringstream out;
    cmd_cf(sqrt3_iet(), out);
    CHECK(out.str() == "[1; (1, 2)]\n");
}
