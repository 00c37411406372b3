#include "mrel/generators.hpp"

#include <algorithm>

namespace mrel {

std::uint64_t derive_seed(std::uint64_t seed, const std::string& tag) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h ^ seed;
}

std::size_t pair_space_size(const Universe& u) {
    return u.size() * (std::size_t{1} << u.size());
}

Multirelation multirelation_from_mask(const Universe& u, std::uint64_t mask) {
    const std::uint32_t subsets = 1u << u.size();
    std::vector<Multirelation::Pair> pairs;
    std::size_t k = 0;
    for (std::uint32_t elem = 0; elem < u.size(); ++elem) {
        for (std::uint32_t image = 0; image < subsets; ++image, ++k) {
            if ((mask >> k) & 1u) pairs.push_back({elem, image});
        }
    }
    return Multirelation(u, std::move(pairs));
}

std::vector<Multirelation> all_multirelations(const Universe& u, bool allow_large) {
    if (!allow_large && u.size() > 2) {
        throw Error("exhaustive enumeration is guarded to universes of size <= 2");
    }
    const std::size_t space = pair_space_size(u);
    if (space >= 32) {
        throw Error("exhaustive enumeration over " + std::to_string(space) +
                    " possible pairs is not materializable");
    }
    const std::uint64_t count = std::uint64_t{1} << space;
    std::vector<Multirelation> out;
    out.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        out.push_back(multirelation_from_mask(u, mask));
    }
    return out;
}

Multirelation random_multirelation(Rng& rng, const Universe& u) {
    const std::size_t space = pair_space_size(u);
    std::uint64_t mask = 0;
    if (space <= 64) {
        mask = rng.bits(static_cast<unsigned>(space));
        return multirelation_from_mask(u, mask);
    }
    // Wide universes: draw each element's row in 64-image blocks.
    const std::uint32_t subsets = 1u << u.size();
    std::vector<Multirelation::Pair> pairs;
    for (std::uint32_t elem = 0; elem < u.size(); ++elem) {
        for (std::uint32_t base = 0; base < subsets; base += 64) {
            const unsigned width = static_cast<unsigned>(
                std::min<std::uint32_t>(64, subsets - base));
            const std::uint64_t block = rng.bits(width);
            for (unsigned offset = 0; offset < width; ++offset) {
                if ((block >> offset) & 1u) pairs.push_back({elem, base + offset});
            }
        }
    }
    return Multirelation(u, std::move(pairs));
}

Multirelation sparse_multirelation(Rng& rng, const Universe& u) {
    Multirelation r = random_multirelation(rng, u);
    r = r & random_multirelation(rng, u);
    return r & random_multirelation(rng, u);
}

std::vector<SubIdentity> all_subidentities(const Universe& u) {
    const std::uint32_t subsets = 1u << u.size();
    std::vector<SubIdentity> out;
    out.reserve(subsets);
    for (std::uint32_t bits = 0; bits < subsets; ++bits) {
        out.push_back(SubIdentity::lift(ElementSet(u, bits)));
    }
    return out;
}

SubIdentity random_subidentity(Rng& rng, const Universe& u) {
    const auto bits =
        static_cast<std::uint32_t>(rng.bits(static_cast<unsigned>(u.size())));
    return SubIdentity::lift(ElementSet(u, bits));
}

}  // namespace mrel
