#include <doctest.h>

#include "mrel/env_io.hpp"
#include "mrel/generators.hpp"
#include "mrel/modal.hpp"
#include "mrel/star.hpp"
#include "mrel/term.hpp"

using namespace mrel;
using M = Multirelation;

TEST_CASE("parser respects precedence") {
    CHECK(term_equal(parse_term("R ; S + T"),
                     t_plus(t_seq(t_var("R"), t_var("S")), t_var("T"))));
    CHECK(term_equal(parse_term("<R^*> p"), t_dia(t_star(t_var("R")), t_var("p"))));
    CHECK(term_equal(parse_term("a(R || S)"), t_anti(t_par(t_var("R"), t_var("S")))));
    CHECK(term_equal(parse_term("R ; S || T + U0"),
                     t_plus(t_par(t_seq(t_var("R"), t_var("S")), t_var("T")),
                            t_var("U0"))));
    CHECK(term_equal(parse_term("[R] p ; S"),
                     t_seq(t_box(t_var("R"), t_var("p")), t_var("S"))));
    CHECK(term_equal(parse_term("<R> p^*"), t_dia(t_var("R"), t_star(t_var("p")))));
    CHECK(term_equal(parse_term("d(R)^*"), t_star(t_dom(t_var("R")))));
}

TEST_CASE("binary operators associate to the left") {
    CHECK(term_equal(parse_term("R ; S ; T"),
                     t_seq(t_seq(t_var("R"), t_var("S")), t_var("T"))));
    CHECK(term_equal(parse_term("R + S + T"),
                     t_plus(t_plus(t_var("R"), t_var("S")), t_var("T"))));
    CHECK(term_equal(parse_term("R || S || T"),
                     t_par(t_par(t_var("R"), t_var("S")), t_var("T"))));
}

TEST_CASE("constants and bstar") {
    CHECK(term_equal(parse_term("0 + 1s + 1p + U"),
                     t_plus(t_plus(t_plus(t_zero(), t_unit_seq()), t_unit_par()),
                            t_univ())));
    CHECK(term_equal(parse_term("bstar(R, S + T)"),
                     t_bstar(t_var("R"), t_plus(t_var("S"), t_var("T")))));
    // d and a stay available as variable names when not applied
    CHECK(term_equal(parse_term("d ; a"), t_seq(t_var("d"), t_var("a"))));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_term("R +"), ParseError);
    CHECK_THROWS_AS(parse_term("(R ; S"), ParseError);
    CHECK_THROWS_AS(parse_term("R ^"), ParseError);
    CHECK_THROWS_AS(parse_term("R | S"), ParseError);
    CHECK_THROWS_AS(parse_term("R S"), ParseError);
    CHECK_THROWS_AS(parse_term(""), ParseError);
    try {
        parse_term("R ; $");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

namespace {

TermPtr random_term(Rng& rng, int depth) {
    if (depth == 0) {
        switch (rng.below(5)) {
            case 0: return t_zero();
            case 1: return t_unit_seq();
            case 2: return t_unit_par();
            case 3: return t_univ();
            default: return t_var(rng.below(2) ? "R" : "p");
        }
    }
    switch (rng.below(10)) {
        case 0: return t_plus(random_term(rng, depth - 1), random_term(rng, depth - 1));
        case 1: return t_seq(random_term(rng, depth - 1), random_term(rng, depth - 1));
        case 2: return t_par(random_term(rng, depth - 1), random_term(rng, depth - 1));
        case 3: return t_dom(random_term(rng, depth - 1));
        case 4: return t_anti(random_term(rng, depth - 1));
        case 5: return t_star(random_term(rng, depth - 1));
        case 6: return t_bstar(random_term(rng, depth - 1), random_term(rng, depth - 1));
        case 7: return t_dia(random_term(rng, depth - 1), random_term(rng, depth - 1));
        case 8: return t_box(random_term(rng, depth - 1), random_term(rng, depth - 1));
        default: return random_term(rng, 0);
    }
}

}  // namespace

TEST_CASE("printing and re-parsing is the identity on terms") {
    Rng rng(61);
    for (int i = 0; i < 500; ++i) {
        const TermPtr t = random_term(rng, 4);
        const std::string text = term_to_string(t);
        CAPTURE(text);
        CHECK(term_equal(parse_term(text), t));
    }
}

TEST_CASE("evaluation worked examples") {
    Environment env = parse_env(
        "universe a b\n"
        "rel R\n"
        "a -> {}\n"
        "end\n"
        "rel p\n"
        "end\n");
    CHECK(eval_term(parse_term("d(R)"), env).to_string() == "{ a -> {a} }");
    CHECK(eval_term(parse_term("<R> p"), env).to_string() == "{ a -> {a} }");
    CHECK(eval_term(parse_term("R ; 1s"), env) == env.lookup("R"));
    CHECK(eval_term(parse_term("U"), env) == Multirelation::universal(env.universe()));
}

TEST_CASE("evaluation matches the operation definitions") {
    Universe u({"a", "b", "c"});
    Rng rng(67);
    for (int i = 0; i < 150; ++i) {
        Environment env(u);
        env.bind("R", random_multirelation(rng, u));
        env.bind("S", random_multirelation(rng, u));
        const M x = env.lookup("R");
        const M y = env.lookup("S");
        CHECK(eval_term(parse_term("<R> S"), env) ==
              diamond(x, domain(y)).rel());
        // boxes evaluate as a(x ; a(y)), which locality makes equal to
        // a(x ; a(d(y))) for arbitrary y
        const M boxed = eval_term(parse_term("[R] S"), env);
        CHECK(boxed == antidomain(seq(x, antidomain(y).rel())).rel());
        CHECK(boxed == antidomain(seq(x, antidomain(domain(y).rel()).rel())).rel());
        CHECK(eval_term(parse_term("bstar(R, S)"), env) == binary_star(x, y));
    }
}

TEST_CASE("environments reject reserved and mismatched bindings") {
    Universe u({"a"});
    Environment env(u);
    CHECK_THROWS_AS(env.bind("1s", M::empty(u)), Error);
    CHECK_THROWS_AS(env.bind("R", M::empty(Universe({"a", "b"}))), Error);
    env.bind("R", M::empty(u));
    CHECK_THROWS_AS(eval_term(parse_term("S"), env), Error);
    CHECK(eval_term(parse_term("R"), env) == M::empty(u));
}
