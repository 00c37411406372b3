#ifndef MREL_TESTS_ORACLES_HPP
#define MREL_TESTS_ORACLES_HPP

#include "mrel/multirelation.hpp"

namespace mrel::testing {

/// Brute-force sequential composition: literally enumerates, for every
/// source pair (a,B) of r, every choice function f with (b,f(b)) in s for
/// all b in B, and collects the unions. Exponential; exists only to check
/// the production fold against the definition. Keep this independent of
/// mrel::seq.
Multirelation seq_oracle(const Multirelation& r, const Multirelation& s);

}  // namespace mrel::testing

#endif
