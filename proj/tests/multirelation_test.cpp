#include <doctest.h>

#include "mrel/env_io.hpp"
#include "mrel/generators.hpp"
#include "mrel/multirelation.hpp"
#include "oracles.hpp"

using namespace mrel;
using M = Multirelation;

namespace {

M rel(const Universe& u, const std::string& literal) {
    return parse_relation_literal(u, literal);
}

}  // namespace

TEST_CASE("constants expand to their defining pair sets") {
    Universe ab({"a", "b"});
    CHECK(M::unit_seq(ab).to_string() == "{ a -> {a}, b -> {b} }");
    Universe a({"a"});
    CHECK(M::unit_par(a).to_string() == "{ a -> {} }");
    CHECK(M::universal(a).to_string() == "{ a -> {}, a -> {a} }");
    CHECK(M::empty(ab).to_string() == "{}");
}

TEST_CASE("union is plain set union") {
    Universe u({"a", "b"});
    const M l = rel(u, "{ a -> {a} }");
    const M r = rel(u, "{ a -> {b} }");
    CHECK((l | r) == rel(u, "{ a -> {a}, a -> {b} }"));
    CHECK((l | M::empty(u)) == l);
    CHECK((l | l) == l);
}

TEST_CASE("sequential composition worked examples") {
    Universe u({"a", "b", "c"});
    const M R = rel(u, "{ a -> {b, c} }");
    const M S = rel(u, "{ b -> {b} }");
    const M T = rel(u, "{ b -> {b}, c -> {} }");
    CHECK(seq(R, S) == M::empty(u));
    CHECK(seq(R, T) == rel(u, "{ a -> {b} }"));
    CHECK(seq(T, S) == T);
}

TEST_CASE("empty-image sources survive composition with anything") {
    Universe u({"a"});
    const M R = rel(u, "{ a -> {} }");
    CHECK(seq(R, M::empty(u)) == R);
    CHECK(seq(R, M::universal(u)) == R);
}

TEST_CASE("sequential units") {
    Universe u({"a", "b"});
    Rng rng(99);
    for (int i = 0; i < 50; ++i) {
        const M r = random_multirelation(rng, u);
        CHECK(seq(r, M::unit_seq(u)) == r);
        CHECK(seq(M::unit_seq(u), r) == r);
    }
}

TEST_CASE("parallel composition worked examples") {
    Universe u({"a", "b", "c"});
    const M R = rel(u, "{ a -> {a, b} }");
    const M S = rel(u, "{ a -> {b, c}, b -> {b} }");
    const M T = rel(u, "{ b -> {} }");
    CHECK(par(R, S) == rel(u, "{ a -> {a, b, c} }"));
    CHECK(par(S, T) == rel(u, "{ b -> {b} }"));
    CHECK(par(R, M::unit_par(u)) == R);
}

TEST_CASE("domain and antidomain") {
    Universe ab({"a", "b"});
    CHECK(domain(rel(ab, "{ a -> {} }")).rel() == rel(ab, "{ a -> {a} }"));
    CHECK(domain(M::empty(ab)).rel() == M::empty(ab));
    CHECK(domain(rel(ab, "{ a -> {b}, b -> {a, b} }")).rel() == M::unit_seq(ab));

    CHECK(antidomain(M::empty(ab)).rel() == M::unit_seq(ab));
    Universe a({"a"});
    CHECK(antidomain(M::universal(a)).rel() == M::empty(a));
    CHECK(antidomain(rel(ab, "{ a -> {} }")).rel() == rel(ab, "{ b -> {b} }"));
}

TEST_CASE("subidentity predicate and lift/lower") {
    Universe u({"a", "b"});
    CHECK(is_subidentity(M::unit_seq(u)));
    CHECK_FALSE(is_subidentity(rel(u, "{ a -> {} }")));
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        CHECK(is_subidentity(domain(random_multirelation(rng, u)).rel()));
    }

    CHECK(SubIdentity::lift(ElementSet(u, std::vector<std::string>{"a", "b"})).rel() ==
          M::unit_seq(u));
    CHECK(SubIdentity::lift(ElementSet(u)).rel() == M::empty(u));
    // lift and lower are mutually inverse on every subset of universes of
    // size one and two
    for (std::uint32_t bits = 0; bits < 4; ++bits) {
        ElementSet set(u, bits);
        CHECK(SubIdentity::lift(set).set() == set);
    }
    Universe single({"a"});
    for (std::uint32_t bits = 0; bits < 2; ++bits) {
        ElementSet set(single, bits);
        CHECK(SubIdentity::lift(set).set() == set);
    }
    CHECK_THROWS_AS(SubIdentity(rel(u, "{ a -> {} }")), Error);
}

TEST_CASE("subidentity complement") {
    Universe a({"a"});
    CHECK(SubIdentity(M::empty(a)).complement().rel() == M::unit_seq(a));
    Universe ab({"a", "b"});
    CHECK(SubIdentity(M::unit_seq(ab)).complement().rel() == M::empty(ab));
    CHECK(SubIdentity(rel(ab, "{ a -> {a} }")).complement().rel() ==
          rel(ab, "{ b -> {b} }"));
    for (const SubIdentity& p : all_subidentities(ab)) {
        const SubIdentity c = p.complement();
        CHECK((p.rel() | c.rel()) == M::unit_seq(ab));
        CHECK(seq(p.rel(), c.rel()) == M::empty(ab));
    }
}

TEST_CASE("operations reject universe mismatches") {
    Universe u({"a"}), v({"a", "b"});
    CHECK_THROWS_AS(seq(M::empty(u), M::empty(v)), Error);
    CHECK_THROWS_AS(par(M::empty(u), M::empty(v)), Error);
    CHECK_THROWS_AS(M::empty(u) | M::empty(v), Error);
    CHECK_THROWS_AS(subseteq(M::empty(u), M::empty(v)), Error);
}

TEST_CASE("composition agrees with the choice-function oracle, size 1 exhaustive") {
    Universe u({"a"});
    const auto all = all_multirelations(u);
    for (const M& r : all) {
        for (const M& s : all) {
            CHECK(seq(r, s) == testing::seq_oracle(r, s));
        }
    }
}

TEST_CASE("composition agrees with the choice-function oracle, size 2 sampled") {
    Universe u({"a", "b"});
    Rng rng(17);
    for (int i = 0; i < 500; ++i) {
        const M r = random_multirelation(rng, u);
        const M s = random_multirelation(rng, u);
        CHECK(seq(r, s) == testing::seq_oracle(r, s));
    }
}

TEST_CASE("composition agrees with the choice-function oracle, size 3 sampled") {
    Universe u({"a", "b", "c"});
    Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        const M r = random_multirelation(rng, u);
        const M s = random_multirelation(rng, u);
        CHECK(seq(r, s) == testing::seq_oracle(r, s));
    }
}

// Join is union, meet is sequential composition (equal to parallel
// composition), complement as above: a boolean algebra, checked over the
// whole subidentity lattice at size 2.
TEST_CASE("subidentities form a boolean algebra") {
    Universe u({"a", "b"});
    const auto subids = all_subidentities(u);
    const M one = M::unit_seq(u);
    const M zero = M::empty(u);
    for (const auto& p : subids) {
        CHECK(seq(p.rel(), p.rel()) == p.rel());
        CHECK((p.rel() | zero) == p.rel());
        CHECK(seq(p.rel(), one) == p.rel());
        for (const auto& q : subids) {
            CHECK(seq(p.rel(), q.rel()) == par(p.rel(), q.rel()));
            CHECK(seq(p.rel(), q.rel()) == (p.rel() & q.rel()));
            // absorption
            CHECK((p.rel() | seq(p.rel(), q.rel())) == p.rel());
            CHECK(seq(p.rel(), p.rel() | q.rel()) == p.rel());
            for (const auto& r : subids) {
                // distributivity
                CHECK(seq(p.rel(), q.rel() | r.rel()) ==
                      (seq(p.rel(), q.rel()) | seq(p.rel(), r.rel())));
                CHECK((p.rel() | seq(q.rel(), r.rel())) ==
                      seq(p.rel() | q.rel(), p.rel() | r.rel()));
            }
        }
    }
}

TEST_CASE("canonical printing is sorted and re-parses") {
    Universe u({"a", "b", "c"});
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        const M r = random_multirelation(rng, u);
        CHECK(parse_relation_literal(u, r.to_string()) == r);
    }
}
