#ifndef MREL_LAWS_HPP
#define MREL_LAWS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mrel/counterexamples.hpp"
#include "mrel/generators.hpp"
#include "mrel/multirelation.hpp"

namespace mrel {

enum class VarKind { Mrel, Subid };
enum class Polarity { ExpectedValid, ExpectedRefutable };

struct LawResult {
    bool holds = false;
    std::string detail;  // rendered sides when the check fails
};

/// One registered equation, inequality or implication over multirelation
/// variables. check is deterministic and total on well-formed inputs.
/// Expected-refutable laws carry no generator plan: they are evaluated on
/// their stored witness from the counterexample registry.
struct Law {
    std::string id;
    std::string anchor;  // the formula, in term syntax
    Polarity polarity = Polarity::ExpectedValid;
    std::vector<VarKind> signature;
    bool star_law = false;  // always exercised in the random size-3 phase
    std::function<LawResult(const Universe&, const std::vector<Multirelation>&)> check;
    /// Optional antecedent-biased sampler for implication-form laws; fills
    /// the value vector in place of independent draws.
    std::function<void(Rng&, const Universe&, std::vector<Multirelation>&)> bias;
    std::string note;

    std::size_t arity() const { return signature.size(); }
};

const std::vector<Law>& law_registry();
const Law* find_law(const std::string& id);

/// Evaluates one law on explicit values; validates the signature (count
/// and subidentity constraints) and throws Error on mismatch.
LawResult check_law(const Law& law, const Universe& u,
                    const std::vector<Multirelation>& values);

enum class SuiteMode { Exhaustive, Random };

struct SuiteConfig {
    std::uint64_t seed = 42;
    std::size_t samples = 500;
    std::string filter;                    // law id prefix; empty selects all
    std::optional<std::size_t> size;       // restrict to one universe size
    std::optional<SuiteMode> mode;         // default: exhaustive <= 2, random above
    std::size_t exhaustive_arity_cap = 2;  // arity cap of the size-2 sweep
};

struct PhaseCount {
    std::string phase;  // e.g. "x1-exhaustive"
    std::size_t checked = 0;
};

struct LawReport {
    std::string id;
    std::string anchor;
    Polarity polarity = Polarity::ExpectedValid;
    std::size_t checked = 0;
    std::size_t failures = 0;
    bool refuted = false;  // refutable laws: witness refuted the law
    std::vector<PhaseCount> phases;
    std::string first_witness;  // preformatted block; empty when clean
    std::string note;

    bool as_expected() const;
};

struct SuiteReport {
    std::string title;  // "law suite" or "counterexample registry"
    std::uint64_t seed = 0;
    std::string config_line;
    std::vector<LawReport> laws;

    bool ok() const;
    /// Line-oriented text; byte-identical for identical config and seed.
    std::string to_text() const;
    /// Machine-readable form: one JSON record per law.
    std::string to_json() const;
};

/// Default plan per expected-valid law: exhaustive sweep at size 1;
/// exhaustive sweep at size 2 for laws with arity <= cap; seeded random
/// environments at size 3 for higher arities and all star laws.
/// Expected-refutable laws replay their stored witness. A config with an
/// explicit size runs only that phase.
SuiteReport run_suite(const SuiteConfig& config = {});

/// Replays every stored witness in the counterexample registry and checks
/// the frozen value of each intermediate set.
SuiteReport run_counterexamples();

}  // namespace mrel

#endif
