#include <doctest.h>

#include "mrel/universe.hpp"

using namespace mrel;

TEST_CASE("universe construction validates names") {
    CHECK_NOTHROW(Universe({"a", "b", "c"}));
    CHECK_THROWS_AS(Universe({"a", "a"}), Error);
    CHECK_THROWS_AS(Universe({""}), Error);
    CHECK_THROWS_AS(Universe({"1bad"}), Error);
    CHECK_THROWS_AS(Universe({"with space"}), Error);
}

TEST_CASE("universe size guardrail") {
    std::vector<std::string> names;
    for (int i = 0; i < 17; ++i) names.push_back("e" + std::to_string(i));
    CHECK_THROWS_AS(Universe{names}, Error);
    CHECK_NOTHROW(Universe(names, 17));  // cap is configurable
}

TEST_CASE("universe order defines indices") {
    Universe u({"b", "a"});
    CHECK(u.index_of("b") == 0);
    CHECK(u.index_of("a") == 1);
    CHECK_THROWS_AS(u.index_of("c"), Error);
    CHECK(u != Universe({"a", "b"}));
    CHECK(u == Universe({"b", "a"}));
}

TEST_CASE("element set operations") {
    Universe u({"a", "b", "c"});
    ElementSet ab(u, std::vector<std::string>{"a", "b"});
    ElementSet bc(u, std::vector<std::string>{"b", "c"});
    CHECK((ab | bc).to_string() == "{a, b, c}");
    CHECK((ab & bc).to_string() == "{b}");
    CHECK((ab - bc).to_string() == "{a}");
    CHECK(ab.complement().to_string() == "{c}");
    CHECK(ElementSet(u).to_string() == "{}");
    CHECK(ab.subseteq(ab | bc));
    CHECK_FALSE((ab | bc).subseteq(ab));
    CHECK_THROWS_AS(ElementSet(u, std::vector<std::string>{"d"}), Error);
}

TEST_CASE("element sets over different universes do not mix") {
    Universe u({"a"}), v({"a", "b"});
    CHECK_THROWS_AS(ElementSet(u) | ElementSet(v), Error);
}
