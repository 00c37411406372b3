#ifndef MREL_MULTIRELATION_HPP
#define MREL_MULTIRELATION_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mrel/universe.hpp"

namespace mrel {

class SubIdentity;

/// A multirelation over a finite universe X: a finite set of pairs
/// (element, image) with image a subset of X. Relates an input state to a
/// *set* of output states, which models the two dual kinds of
/// nondeterminism (internal choice between pairs, external choice inside
/// an image set).
///
/// Values are immutable after construction. Pairs are kept sorted and
/// deduplicated, keyed by (element index, image bits), so equality is
/// plain extensional set equality; no up-closure or other normalization is
/// ever applied.
class Multirelation {
  public:
    struct Pair {
        std::uint32_t elem;   // element index in the universe
        std::uint32_t image;  // subset of the universe as bits
        auto operator<=>(const Pair&) const = default;
    };

    /// Empty multirelation.
    explicit Multirelation(Universe universe);
    /// From an explicit pair list (sorted and deduplicated here).
    Multirelation(Universe universe, std::vector<Pair> pairs);

    static Multirelation empty(const Universe& u) { return Multirelation(u); }
    /// 1s = {(a,{a}) | a in X}, the unit of sequential composition.
    static Multirelation unit_seq(const Universe& u);
    /// 1p = {(a,{}) | a in X}, the unit of parallel composition.
    static Multirelation unit_par(const Universe& u);
    /// U = {(a,A) | a in X, A subset of X}.
    static Multirelation universal(const Universe& u);

    const Universe& universe() const { return universe_; }
    const std::vector<Pair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }
    bool contains(std::uint32_t elem, std::uint32_t image) const;

    bool operator==(const Multirelation& rhs) const;
    bool operator!=(const Multirelation& rhs) const { return !(*this == rhs); }

    Multirelation operator|(const Multirelation& rhs) const;  // union
    Multirelation operator&(const Multirelation& rhs) const;  // intersection
    Multirelation operator-(const Multirelation& rhs) const;  // difference

    /// Renders as "{ a -> {b, c}, b -> {} }"; "{}" when empty. Pairs in
    /// (element, image bits) order, so output is canonical.
    std::string to_string() const;

  private:
    // Trusted path for operations that emit sorted, deduplicated pairs.
    struct SortedUnique {};
    Multirelation(Universe universe, std::vector<Pair> pairs, SortedUnique)
        : universe_(std::move(universe)), pairs_(std::move(pairs)) {}
    friend Multirelation seq(const Multirelation&, const Multirelation&);

    Universe universe_;
    std::vector<Pair> pairs_;
};

bool subseteq(const Multirelation& a, const Multirelation& b);
bool proper_subset(const Multirelation& a, const Multirelation& b);

/// Peleg sequential composition. (a,A) is in seq(r,s) iff r relates a to
/// some intermediate set B and a choice function f picks for every b in B
/// an image (b,f(b)) in s with A the union of the choices. A source pair
/// (a,{}) always contributes (a,{}): the empty choice function exists
/// vacuously.
///
/// Computed per source pair by folding the deduplicated set of achievable
/// partial unions over the elements of B, which is equivalent to (but
/// exponentially cheaper than) enumerating the choice functions.
Multirelation seq(const Multirelation& r, const Multirelation& s);

/// Parallel composition {(a, A|B) | (a,A) in r, (a,B) in s}: both sides
/// contribute a part of the collective output.
Multirelation par(const Multirelation& r, const Multirelation& s);

/// True iff every pair has the shape (a,{a}), i.e. the value is below 1s.
bool is_subidentity(const Multirelation& r);

/// A multirelation below 1s: every pair is (a,{a}). Subidentities encode
/// sets of states and play the role of tests/propositions; they are the
/// image of the domain and antidomain operations.
class SubIdentity {
  public:
    /// Validates the shape; throws Error otherwise.
    explicit SubIdentity(Multirelation rel);

    /// Lifts a set A to the subidentity {(a,{a}) | a in A}.
    static SubIdentity lift(const ElementSet& set);

    const Multirelation& rel() const { return rel_; }
    operator const Multirelation&() const { return rel_; }
    const Universe& universe() const { return rel_.universe(); }

    /// The inverse of lift.
    ElementSet set() const;

    /// Boolean complement within the subidentity lattice: this | result
    /// is 1s and seq(this, result) is empty.
    SubIdentity complement() const;

    bool operator==(const SubIdentity& rhs) const { return rel_ == rhs.rel_; }
    bool operator!=(const SubIdentity& rhs) const { return !(*this == rhs); }

  private:
    struct Unchecked {};
    SubIdentity(Multirelation rel, Unchecked) : rel_(std::move(rel)) {}
    Multirelation rel_;

    friend SubIdentity domain(const Multirelation&);
    friend SubIdentity antidomain(const Multirelation&);
};

/// d(r) = {(a,{a}) | r relates a to at least one set}: the states from
/// which r is enabled.
SubIdentity domain(const Multirelation& r);

/// a(r) = {(a,{a}) | r relates a to no set}: the boolean complement of
/// d(r) inside 1s.
SubIdentity antidomain(const Multirelation& r);

inline SubIdentity lift_set(const ElementSet& set) { return SubIdentity::lift(set); }
inline ElementSet lower_subidentity(const SubIdentity& p) { return p.set(); }
inline SubIdentity complement_subidentity(const SubIdentity& p) { return p.complement(); }

}  // namespace mrel

#endif
