#include <doctest.h>

#include <algorithm>

#include "mrel/finite_algebra.hpp"

using namespace mrel;

namespace {

const FiniteAlgebra& chain4() {
    static const FiniteAlgebra alg = builtin_models()[0];
    return alg;
}

const FiniteAlgebra& chain3() {
    static const FiniteAlgebra alg = builtin_models()[1];
    return alg;
}

bool contains(const std::vector<int>& xs, int x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
}

}  // namespace

TEST_CASE("both builtin models pass dp-trioid exhaustively") {
    for (const auto& alg : builtin_models()) {
        const auto result = check_table_axioms(alg, AlgebraSystem::DpTrioid);
        CAPTURE(alg.name);
        CHECK(result.ok);
    }
}

TEST_CASE("chain4: the subidentity a is not complemented") {
    const FiniteAlgebra& alg = chain4();
    const int a = 1, one_sig = 3, zero = 0;
    // the only y with a + y = 1sig is 1sig itself, and 1sig ; a = a != 0
    for (int y = 0; y < 4; ++y) {
        if (alg.plus_at(a, y) == one_sig) CHECK(y == one_sig);
    }
    CHECK(alg.seq_at(one_sig, a) == a);
    CHECK(alg.seq_at(one_sig, a) != zero);

    const auto complemented = complemented_elements(alg);
    CHECK(complemented == std::vector<int>{0, 3});
    const auto dimage = domain_image(alg);
    CHECK(dimage == std::vector<int>{0, 1, 3});
    // complemented elements sit strictly inside the domain elements
    for (int x : complemented) CHECK(contains(dimage, x));
    CHECK(complemented.size() < dimage.size());
}

TEST_CASE("chain4: spot values of the tables") {
    const FiniteAlgebra& alg = chain4();
    const int zero = 0, a = 1, one_pi = 2, one_sig = 3;
    CHECK(alg.par_at(one_pi, one_sig) == one_sig);
    CHECK(alg.par_at(one_pi, one_pi) == one_pi);
    CHECK(alg.seq_at(a, zero) == zero);
    CHECK(alg.seq_at(a, one_pi) == a);
    CHECK(alg.dom_at(one_pi) == one_sig);
    CHECK(alg.dom_at(a) == a);
}

TEST_CASE("chain3: the diamond of the parallel unit is not co-strict") {
    const FiniteAlgebra& alg = chain3();
    CHECK(table_diamond(alg, alg.unit_par, alg.zero) == alg.zero);
    CHECK(table_diamond(alg, alg.unit_par, alg.zero) != alg.unit_seq);
    CHECK(alg.dom_at(alg.unit_seq) == alg.unit_seq);
    CHECK(alg.dom_at(alg.unit_par) == alg.unit_seq);
    CHECK(alg.dom_at(alg.zero) == alg.zero);
}

TEST_CASE("a two-element boolean algebra forms a dp-trioid") {
    FiniteAlgebra alg;
    alg.name = "bool2";
    alg.carrier = {"0", "1"};
    alg.zero = 0;
    alg.unit_seq = 1;
    alg.unit_par = 1;
    alg.plus = {{0, 1}, {1, 1}};
    alg.seq = {{0, 0}, {0, 1}};   // meet
    alg.par = {{0, 0}, {0, 1}};   // meet again
    alg.dom = {0, 1};             // identity
    CHECK(check_table_axioms(alg, AlgebraSystem::DpTrioid).ok);
}

TEST_CASE("axiom failures are reported with instances") {
    FiniteAlgebra broken = chain3();
    broken.seq[1][0] = 2;  // 1sig ; 0 = 1pi wrecks the left unit law
    const auto result = check_table_axioms(broken, AlgebraSystem::DpTrioid);
    CHECK_FALSE(result.ok);
    bool found = false;
    for (const auto& f : result.failures) {
        if (f.axiom == "seq-left-unit") found = true;
        CHECK_FALSE(f.instance.empty());
    }
    CHECK(found);
}

// 1pi ; 0 = 1pi is how the parallel unit actually behaves over
// multirelations; flipping the builtin's entry to it must still satisfy
// every dp-trioid axiom.
TEST_CASE("the chain3 tables tolerate the multirelational 1pi ; 0 reading") {
    FiniteAlgebra variant = chain3();
    variant.seq[2][0] = 2;
    CHECK(check_table_axioms(variant, AlgebraSystem::DpTrioid).ok);
}

TEST_CASE("missing tables are rejected per system") {
    FiniteAlgebra alg = chain3();
    CHECK_THROWS_AS(check_table_axioms(alg, AlgebraSystem::ApTrioid), Error);
    CHECK_THROWS_AS(check_table_axioms(alg, AlgebraSystem::DpBiKleene), Error);
    FiniteAlgebra no_par = chain3();
    no_par.par.clear();
    CHECK_THROWS_AS(check_table_axioms(no_par, AlgebraSystem::DpTrioid), Error);
    CHECK(check_table_axioms(no_par, AlgebraSystem::DpDioid).ok);
}

TEST_CASE("the reified one-element multirelation algebra is an ap-bi-kleene model") {
    const FiniteAlgebra alg = reify_multirelations(Universe({"a"}));
    CHECK(alg.size() == 4);
    CHECK(check_table_axioms(alg, AlgebraSystem::ApBiKleene).ok);
    CHECK(check_table_axioms(alg, AlgebraSystem::DpBiKleene).ok);
    CHECK(check_table_axioms(alg, AlgebraSystem::DpTrioid).ok);
}

TEST_CASE("table models serialize and re-parse") {
    for (const auto& alg : builtin_models()) {
        const FiniteAlgebra back = FiniteAlgebra::from_text(alg.to_text());
        CHECK(same_tables(alg, back));
        CHECK(back.carrier == alg.carrier);
        CHECK(back.name == alg.name);
    }
    const FiniteAlgebra reified = reify_multirelations(Universe({"a"}));
    CHECK(same_tables(reified, FiniteAlgebra::from_text(reified.to_text())));
}

TEST_CASE("malformed table files are rejected") {
    CHECK_THROWS_AS(FiniteAlgebra::from_text("carrier a b\ntable plus\na a\n"),
                    Error);  // truncated table
    CHECK_THROWS_AS(FiniteAlgebra::from_text(
                        "carrier a b\ntable plus\na a\na c\ntable seq\na a\na a\n"),
                    Error);  // unknown element
    CHECK_THROWS_AS(FiniteAlgebra::from_text("table plus\n"), Error);
}

TEST_CASE("search finds the three-element builtin as a dp-trioid") {
    ModelSearchSpec spec;
    spec.system = AlgebraSystem::DpTrioid;
    spec.size = 3;
    spec.limit = 1000;
    const auto result = search_models(spec);
    CHECK_FALSE(result.models.empty());
    bool found = false;
    for (const auto& m : result.models) {
        if (same_tables(m, chain3())) found = true;
        CHECK(check_table_axioms(m, AlgebraSystem::DpTrioid).ok);
    }
    CHECK(found);
}

TEST_CASE("search records an empty outcome for an unachievable violation") {
    ModelSearchSpec spec;
    spec.system = AlgebraSystem::ProtoDioid;
    spec.size = 2;
    spec.violate_axiom = "seq-left-subdistr";
    const auto result = search_models(spec);
    CHECK(result.models.empty());
    CHECK_FALSE(result.budget_exhausted);
}

TEST_CASE("search finds the four-element builtin via its defect") {
    ModelSearchSpec spec;
    spec.system = AlgebraSystem::DpTrioid;
    spec.size = 4;
    spec.require_property = "non-complemented-subidentity";
    spec.limit = 100000;
    const auto result = search_models(spec);
    // pinned layout is [0, 1s, 1p, e3]; chain4 stores [0, a, 1pi, 1sig]
    const FiniteAlgebra pinned = reindex(chain4(), {0, 3, 2, 1});
    bool found = false;
    for (const auto& m : result.models) {
        if (same_tables(m, pinned)) found = true;
    }
    CHECK(found);
}

TEST_CASE("search rejects bad sizes, unknown axioms and properties") {
    ModelSearchSpec spec;
    spec.size = 5;
    CHECK_THROWS_AS(search_models(spec), Error);
    spec.size = 3;
    spec.violate_axiom = "no-such-axiom";
    CHECK_THROWS_AS(search_models(spec), Error);
    spec.violate_axiom.clear();
    spec.require_property = "no-such-property";
    CHECK_THROWS_AS(search_models(spec), Error);
    // violating an axiom outside the system is also rejected
    spec.require_property.clear();
    spec.system = AlgebraSystem::ProtoDioid;
    spec.violate_axiom = "dom-locality";
    CHECK_THROWS_AS(search_models(spec), Error);
}

TEST_CASE("violation search produces models that really violate the target") {
    ModelSearchSpec spec;
    spec.system = AlgebraSystem::ProtoDioid;
    spec.size = 3;
    spec.violate_axiom = "seq-left-subdistr";
    spec.limit = 8;
    const auto result = search_models(spec);
    for (const auto& m : result.models) {
        const auto check = check_table_axioms(m, AlgebraSystem::ProtoDioid);
        CHECK_FALSE(check.ok);
        for (const auto& f : check.failures) CHECK(f.axiom == "seq-left-subdistr");
    }
}
