#ifndef MREL_FINITE_ALGEBRA_HPP
#define MREL_FINITE_ALGEBRA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mrel/multirelation.hpp"

namespace mrel {

enum class AlgebraSystem {
    ProtoDioid,
    ProtoTrioid,
    DpDioid,
    DpTrioid,
    ApDioid,
    ApTrioid,
    DpBiKleene,
    ApBiKleene,
};

AlgebraSystem parse_system(const std::string& name);
std::string system_name(AlgebraSystem system);

/// An abstract finite model given by operation tables over a named
/// carrier. par, dom, anti and star are optional; which of them a given
/// check needs depends on the axiom system. Carrier sizes stay small
/// (<= 8), so every axiom is quantified exhaustively and exactly.
struct FiniteAlgebra {
    std::string name;
    std::vector<std::string> carrier;
    std::vector<std::vector<int>> plus;
    std::vector<std::vector<int>> seq;
    std::vector<std::vector<int>> par;   // may be empty
    std::vector<int> dom;                // may be empty
    std::vector<int> anti;               // may be empty
    std::vector<int> star;               // may be empty
    int zero = 0;
    int unit_seq = 0;
    int unit_par = 0;
    std::vector<std::string> notes;

    std::size_t size() const { return carrier.size(); }
    bool has_par() const { return !par.empty(); }
    bool has_dom() const { return !dom.empty(); }
    bool has_anti() const { return !anti.empty(); }
    bool has_star() const { return !star.empty(); }

    int plus_at(int x, int y) const { return plus[x][y]; }
    int seq_at(int x, int y) const { return seq[x][y]; }
    int par_at(int x, int y) const { return par[x][y]; }
    int anti_at(int x) const { return anti[x]; }
    int star_at(int x) const { return star[x]; }
    /// Domain, falling back to anti(anti(x)) when only anti is present.
    int dom_at(int x) const { return has_dom() ? dom[x] : anti[anti[x]]; }
    /// Semilattice order: x <= y iff x + y = y.
    bool le(int x, int y) const { return plus[x][y] == y; }

    /// Checks table totality and range; throws Error on malformed data.
    void validate() const;

    std::string to_text() const;
    static FiniteAlgebra from_text(const std::string& text);
};

struct AxiomFailure {
    std::string axiom;
    std::string instance;  // e.g. "x=a y=1pi z=0"
};

struct TableCheckResult {
    bool ok = true;
    std::vector<AxiomFailure> failures;
};

/// The names of the axioms a system comprises, in check order.
std::vector<std::string> system_axioms(AlgebraSystem system);

/// Exhaustively quantifies every axiom of the system over the carrier.
/// Throws Error when a table the system needs is missing.
TableCheckResult check_table_axioms(const FiniteAlgebra& algebra,
                                    AlgebraSystem system);

/// Elements x with a complement y (x+y = 1s, y;x = 0, x;y = 0).
std::vector<int> complemented_elements(const FiniteAlgebra& algebra);

/// The image of the carrier under the domain operation, sorted.
std::vector<int> domain_image(const FiniteAlgebra& algebra);

/// d(x ; y) over the tables.
int table_diamond(const FiniteAlgebra& algebra, int x, int y);

/// The two bundled table models: a four-element chain whose subidentity a
/// has no complement, and a three-element chain in which <1p>0 = 0 < 1s.
/// Both carry corrected readings of garbled source rows, documented in
/// their notes.
std::vector<FiniteAlgebra> builtin_models();

/// The full multirelation algebra over u reified as operation tables
/// (with antidomain and star), one carrier element per multirelation.
FiniteAlgebra reify_multirelations(const Universe& u);

/// True when the two algebras have identical tables and constants (names
/// are ignored).
bool same_tables(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Relabels carrier indices; perm[old] = new.
FiniteAlgebra reindex(const FiniteAlgebra& algebra, const std::vector<int>& perm);

struct ModelSearchSpec {
    AlgebraSystem system = AlgebraSystem::DpTrioid;
    std::size_t size = 3;                // 2, 3 or 4
    std::string violate_axiom;           // axiom name, or empty for none
    std::string require_property;        // see below, or empty
    std::uint64_t budget = 20'000'000;   // candidate tables examined
    std::size_t limit = 16;              // models returned at most
};

/// Known property names for ModelSearchSpec::require_property:
///   "non-complemented-subidentity"  some x <= 1s has no complement
///   "diamond-par-unit-lt"           d(1p ; 0) differs from 1s
struct ModelSearchResult {
    std::vector<FiniteAlgebra> models;
    std::uint64_t candidates = 0;
    bool budget_exhausted = false;
};

/// Pruned backtracking over operation tables with 0, 1s, 1p pinned to the
/// first carrier indices (1p collapses onto 1s at size 2). Returns models
/// satisfying every system axiom except a requested violation target,
/// violating that target, and satisfying the property predicate. An empty
/// result is a legitimate outcome.
ModelSearchResult search_models(const ModelSearchSpec& spec);

}  // namespace mrel

#endif
