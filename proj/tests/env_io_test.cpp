#include <doctest.h>

#include "mrel/counterexamples.hpp"
#include "mrel/env_io.hpp"
#include "mrel/generators.hpp"

using namespace mrel;
using M = Multirelation;

TEST_CASE("loading the documented file shape") {
    const Environment env = parse_env(
        "# comment\n"
        "universe a b\n"
        "\n"
        "rel R\n"
        "a -> {}\n"
        "end\n");
    CHECK(env.universe().names() == std::vector<std::string>{"a", "b"});
    CHECK(env.lookup("R").to_string() == "{ a -> {} }");
}

TEST_CASE("save then load is the identity") {
    Universe u({"a", "b", "c"});
    Rng rng(71);
    for (int i = 0; i < 50; ++i) {
        Environment env(u);
        env.bind("R", random_multirelation(rng, u));
        env.bind("S", random_multirelation(rng, u));
        env.bind("p", random_subidentity(rng, u).rel());
        const std::string text = env_to_text(env);
        CHECK(parse_env(text) == env);
        // serialization is canonical: a second round trip is byte-stable
        CHECK(env_to_text(parse_env(text)) == text);
    }
}

TEST_CASE("loading normalizes to canonical form") {
    const Environment env = parse_env(
        "universe a b\n"
        "rel R\n"
        "b -> {a}\n"
        "a -> {b}\n"
        "a -> {b}\n"
        "end\n");
    CHECK(env_to_text(env) ==
          "universe a b\n"
          "rel R\n"
          "a -> {b}\n"
          "b -> {a}\n"
          "end\n");
}

TEST_CASE("a one-line relation literal is accepted inside a block") {
    const Environment env = parse_env(
        "universe a b\n"
        "rel R\n"
        "{ a -> {a}, b -> {} }\n"
        "end\n");
    CHECK(env.lookup("R").to_string() == "{ a -> {a}, b -> {} }");
}

TEST_CASE("format errors carry line numbers") {
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_env(text);
        } catch (const FileFormatError& e) {
            return e.line;
        }
        return 0;
    };
    CHECK(line_of("universe a\nrel R\nc -> {}\nend\n") == 3);
    CHECK(line_of("universe a\nrel R\na -> {c}\nend\n") == 3);
    CHECK(line_of("rel R\n") == 1);
    CHECK(line_of("universe a\nrel R\n") == 2);             // unterminated block
    CHECK(line_of("universe a\na -> {}\n") == 2);           // pair outside block
    CHECK(line_of("universe a\nrel R\nend\nrel R\nend\n") == 5);
    CHECK(line_of("universe a\nuniverse b\n") == 2);
    CHECK(line_of("universe a\nrel R\na - {}\nend\n") == 3);
}

TEST_CASE("relation literals re-parse the canonical rendering") {
    Universe u({"a", "b"});
    CHECK(parse_relation_literal(u, "{}") == M::empty(u));
    CHECK(parse_relation_literal(u, "{a->{a,b},b->{}}") ==
          parse_relation_literal(u, "{ a -> {a, b}, b -> {} }"));
    CHECK_THROWS_AS(parse_relation_literal(u, "a -> {}"), FileFormatError);
    CHECK_THROWS_AS(parse_relation_literal(u, "{ c -> {} }"), FileFormatError);
}

TEST_CASE("stored witness environments round-trip through serialization") {
    for (const Counterexample& ce : counterexample_registry()) {
        const std::string text = env_to_text(ce.env);
        CHECK(parse_env(text) == ce.env);
    }
}
