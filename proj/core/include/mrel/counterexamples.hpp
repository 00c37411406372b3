#ifndef MREL_COUNTEREXAMPLES_HPP
#define MREL_COUNTEREXAMPLES_HPP

#include <functional>
#include <string>
#include <vector>

#include "mrel/term.hpp"

namespace mrel {

/// One recomputed value inside a witness replay, compared against its
/// frozen expected rendering.
struct WitnessCheck {
    std::string label;
    std::string expected;
    std::string got;
    bool ok = false;
};

struct WitnessResult {
    std::string id;
    std::vector<WitnessCheck> checks;
    bool ok() const;
};

/// A stored refutation witness: a fixed environment, the exact values the
/// replay must reproduce, and the law it refutes. Where a documented
/// source value disagrees with the exact computation, the derived-correct
/// value is frozen and a note with the machine-readable prefix
/// "paper_discrepancy:" records the difference.
struct Counterexample {
    std::string id;       // e.g. "seq-associativity"
    std::string refutes;  // law id (empty for registry-only records)
    std::string anchor;   // the formula this witness refutes
    Environment env;
    std::vector<std::string> law_args;  // env names feeding the law's variables
    std::vector<std::string> notes;
    std::function<WitnessResult(const Counterexample&)> replay;
};

const std::vector<Counterexample>& counterexample_registry();

/// The stored witness refuting a given neg.* law; throws Error if none.
const Counterexample& witness_for_law(const std::string& law_id);

}  // namespace mrel

#endif
