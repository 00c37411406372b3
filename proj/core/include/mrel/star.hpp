#ifndef MREL_STAR_HPP
#define MREL_STAR_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "mrel/multirelation.hpp"

namespace mrel {

/// Record of a least-fixpoint ascent from the empty multirelation.
/// iterates[0] is empty, iterates[k+1] = f(iterates[k]), and the sequence
/// ends at the first index whose value is reproduced by f. The iterates
/// are kept (not just the limit) so finite-power comparisons and trace
/// reporting can inspect the whole chain.
struct FixpointTrace {
    std::vector<Multirelation> iterates;
    std::size_t stabilized_at = 0;

    const Multirelation& limit() const { return iterates.at(stabilized_at); }
};

/// Default iteration bound: stabilization over a finite universe happens
/// within a handful of steps in practice; the bound turns a non-isotone
/// or runaway generator into a diagnosable error instead of a hang.
std::size_t default_max_steps(const Universe& u);

/// Kleene ascent from {} for an isotone f. Throws Error if the ascent
/// stops being a chain (f not isotone) or exceeds max_steps.
FixpointTrace lfp_iterate(const std::function<Multirelation(const Multirelation&)>& f,
                          const Universe& u, std::size_t max_steps);

/// r^* : least fixpoint of X |-> 1s | r ; X. Satisfies 1s | r ; r^* = r^*.
Multirelation star(const Multirelation& r);
FixpointTrace star_trace(const Multirelation& r);

/// bstar(r, s) : least fixpoint of X |-> s | r ; X. Satisfies
/// s | r ; bstar(r,s) = bstar(r,s).
Multirelation binary_star(const Multirelation& r, const Multirelation& s);

/// Finite power: r^(0) = {}, r^(n+1) = 1s | r ; r^(n). Equals the n-fold
/// application of the star's generating function to {}.
Multirelation approx_power(const Multirelation& r, std::size_t n);

}  // namespace mrel

#endif
