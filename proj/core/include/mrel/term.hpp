#ifndef MREL_TERM_HPP
#define MREL_TERM_HPP

#include <map>
#include <memory>
#include <string>

#include "mrel/multirelation.hpp"

namespace mrel {

/// Parse failure with the offending position (0-based offset into the
/// input text).
struct ParseError : Error {
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)),
          position(position) {}
    std::size_t position;
};

enum class TermKind {
    Zero,     // 0
    UnitSeq,  // 1s
    UnitPar,  // 1p
    Univ,     // U
    Var,      // identifier
    Plus,     // t + t
    Seq,      // t ; t
    Par,      // t || t
    Dom,      // d(t)
    Anti,     // a(t)
    Star,     // t^*
    BStar,    // bstar(t, t)
    Dia,      // <t> t
    Box,      // [t] t
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Immutable expression tree. lhs/rhs are null where the kind takes fewer
/// children; var is set only for Var.
struct Term {
    TermKind kind;
    std::string var;
    TermPtr lhs;
    TermPtr rhs;
};

TermPtr t_zero();
TermPtr t_unit_seq();
TermPtr t_unit_par();
TermPtr t_univ();
TermPtr t_var(std::string name);
TermPtr t_plus(TermPtr l, TermPtr r);
TermPtr t_seq(TermPtr l, TermPtr r);
TermPtr t_par(TermPtr l, TermPtr r);
TermPtr t_dom(TermPtr t);
TermPtr t_anti(TermPtr t);
TermPtr t_star(TermPtr t);
TermPtr t_bstar(TermPtr l, TermPtr r);
TermPtr t_dia(TermPtr l, TermPtr r);
TermPtr t_box(TermPtr l, TermPtr r);

bool term_equal(const TermPtr& a, const TermPtr& b);

/// Parses the concrete syntax
///
///   t ::= 0 | 1s | 1p | U | ident | d(t) | a(t)
///       | t + t | t ; t | t || t | t^* | bstar(t, t) | <t> t | [t] t | (t)
///
/// Binding, tightest first: postfix ^*, then the prefixes d/a/<>/[],
/// then ;, then ||, then +. Binary operators associate to the left.
/// 0, 1s, 1p and U are reserved and cannot name variables.
TermPtr parse_term(const std::string& text);

/// Renders with the minimal parentheses that re-parse to the same tree.
std::string term_to_string(const TermPtr& t);

/// Binds variable names to multirelations over one shared universe.
class Environment {
  public:
    explicit Environment(Universe universe) : universe_(std::move(universe)) {}

    const Universe& universe() const { return universe_; }
    const std::map<std::string, Multirelation>& bindings() const { return bindings_; }

    /// Rejects reserved names and universe mismatches.
    void bind(const std::string& name, Multirelation value);
    bool bound(const std::string& name) const;
    const Multirelation& lookup(const std::string& name) const;

    bool operator==(const Environment& rhs) const;

  private:
    Universe universe_;
    std::map<std::string, Multirelation> bindings_;
};

/// Structural evaluation. Diamonds apply domain to the second argument
/// first (<x>y = <x>d(y)); boxes evaluate as a(x ; a(y)), which agrees
/// with a(x ; a(d(y))) by locality for every y.
Multirelation eval_term(const TermPtr& t, const Environment& env);

}  // namespace mrel

#endif
