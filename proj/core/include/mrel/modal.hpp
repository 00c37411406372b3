#ifndef MREL_MODAL_HPP
#define MREL_MODAL_HPP

#include "mrel/multirelation.hpp"

namespace mrel {

/// <r>p = d(r ; p). The states from which r may reach a set of states all
/// inside p. Computed through domain and sequential composition; the
/// companion diamond_direct evaluates the set comprehension without
/// composing, and the two must agree on every input.
SubIdentity diamond(const Multirelation& r, const SubIdentity& p);

/// <r>p evaluated directly: {(a,{a}) | some (a,B) in r with lift(B) <= p}.
SubIdentity diamond_direct(const Multirelation& r, const SubIdentity& p);

/// [r]p = a(r ; a(p)), the De Morgan dual of the diamond. Must agree with
/// box_direct on every input.
SubIdentity box(const Multirelation& r, const SubIdentity& p);

/// [r]p evaluated directly: {(a,{a}) | every (a,B) in r has lift(B)
/// meeting p}. Elements with no r-pair at all are included vacuously.
SubIdentity box_direct(const Multirelation& r, const SubIdentity& p);

}  // namespace mrel

#endif
