#ifndef MREL_GENERATORS_HPP
#define MREL_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "mrel/multirelation.hpp"

namespace mrel {

/// Deterministic random source. mt19937_64 output is fully specified by
/// the standard; only raw engine words are consumed here, so identical
/// seeds give identical streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t word() { return engine_(); }

    /// The low n bits of one engine word (n <= 64).
    std::uint64_t bits(unsigned n) {
        return n >= 64 ? word() : (word() & ((std::uint64_t{1} << n) - 1));
    }

    /// Uniform-ish index below bound (bound > 0); bias is irrelevant at
    /// the sizes used here and the result stays platform-stable.
    std::size_t below(std::size_t bound) { return word() % bound; }

  private:
    std::mt19937_64 engine_;
};

/// Stable per-stream seed derivation (FNV-1a over the tag).
std::uint64_t derive_seed(std::uint64_t seed, const std::string& tag);

/// Number of possible pairs over u: |X| * 2^|X|.
std::size_t pair_space_size(const Universe& u);

/// Decodes a pair-inclusion bitmask into a multirelation. Bit k of mask
/// selects the k-th possible pair in (element, image bits) order.
Multirelation multirelation_from_mask(const Universe& u, std::uint64_t mask);

/// All 2^(|X| * 2^|X|) multirelations, each exactly once. Guarded to
/// |X| <= 2 unless allow_large is set.
std::vector<Multirelation> all_multirelations(const Universe& u,
                                              bool allow_large = false);

/// Uniform over pair inclusion: each possible pair is in or out with
/// equal probability.
Multirelation random_multirelation(Rng& rng, const Universe& u);

/// Sparse sample (each pair kept with probability 1/8); used as noise in
/// antecedent-biased law sampling.
Multirelation sparse_multirelation(Rng& rng, const Universe& u);

/// The full subidentity lattice: one value per subset of X.
std::vector<SubIdentity> all_subidentities(const Universe& u);

SubIdentity random_subidentity(Rng& rng, const Universe& u);

}  // namespace mrel

#endif
