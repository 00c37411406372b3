#include "mrel/multirelation.hpp"

#include <algorithm>

namespace mrel {

Multirelation::Multirelation(Universe universe) : universe_(std::move(universe)) {}

Multirelation::Multirelation(Universe universe, std::vector<Pair> pairs)
    : universe_(std::move(universe)), pairs_(std::move(pairs)) {
    const std::uint32_t n = static_cast<std::uint32_t>(universe_.size());
    const std::uint32_t mask = universe_.full_mask();
    for (const Pair& p : pairs_) {
        if (p.elem >= n) throw Error("multirelation pair element out of range");
        if (p.image & ~mask) throw Error("multirelation pair image outside universe");
    }
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

Multirelation Multirelation::unit_seq(const Universe& u) {
    std::vector<Pair> pairs;
    pairs.reserve(u.size());
    for (std::uint32_t i = 0; i < u.size(); ++i) pairs.push_back({i, 1u << i});
    return Multirelation(u, std::move(pairs));
}

Multirelation Multirelation::unit_par(const Universe& u) {
    std::vector<Pair> pairs;
    pairs.reserve(u.size());
    for (std::uint32_t i = 0; i < u.size(); ++i) pairs.push_back({i, 0});
    return Multirelation(u, std::move(pairs));
}

Multirelation Multirelation::universal(const Universe& u) {
    std::vector<Pair> pairs;
    const std::uint32_t subsets = 1u << u.size();
    pairs.reserve(u.size() * subsets);
    for (std::uint32_t i = 0; i < u.size(); ++i) {
        for (std::uint32_t image = 0; image < subsets; ++image) {
            pairs.push_back({i, image});
        }
    }
    return Multirelation(u, std::move(pairs));
}

bool Multirelation::contains(std::uint32_t elem, std::uint32_t image) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), Pair{elem, image});
}

bool Multirelation::operator==(const Multirelation& rhs) const {
    return universe_ == rhs.universe_ && pairs_ == rhs.pairs_;
}

Multirelation Multirelation::operator|(const Multirelation& rhs) const {
    require_same_universe(universe_, rhs.universe_, "union");
    std::vector<Pair> out;
    out.reserve(pairs_.size() + rhs.pairs_.size());
    std::set_union(pairs_.begin(), pairs_.end(), rhs.pairs_.begin(), rhs.pairs_.end(),
                   std::back_inserter(out));
    Multirelation result(universe_);
    result.pairs_ = std::move(out);
    return result;
}

Multirelation Multirelation::operator&(const Multirelation& rhs) const {
    require_same_universe(universe_, rhs.universe_, "intersection");
    std::vector<Pair> out;
    std::set_intersection(pairs_.begin(), pairs_.end(), rhs.pairs_.begin(),
                          rhs.pairs_.end(), std::back_inserter(out));
    Multirelation result(universe_);
    result.pairs_ = std::move(out);
    return result;
}

Multirelation Multirelation::operator-(const Multirelation& rhs) const {
    require_same_universe(universe_, rhs.universe_, "difference");
    std::vector<Pair> out;
    std::set_difference(pairs_.begin(), pairs_.end(), rhs.pairs_.begin(),
                        rhs.pairs_.end(), std::back_inserter(out));
    Multirelation result(universe_);
    result.pairs_ = std::move(out);
    return result;
}

std::string Multirelation::to_string() const {
    if (pairs_.empty()) return "{}";
    std::string out = "{ ";
    bool first = true;
    for (const Pair& p : pairs_) {
        if (!first) out += ", ";
        first = false;
        out += universe_.name(p.elem);
        out += " -> ";
        out += ElementSet(universe_, p.image).to_string();
    }
    out += " }";
    return out;
}

bool subseteq(const Multirelation& a, const Multirelation& b) {
    require_same_universe(a.universe(), b.universe(), "inclusion");
    return std::includes(b.pairs().begin(), b.pairs().end(), a.pairs().begin(),
                         a.pairs().end());
}

bool proper_subset(const Multirelation& a, const Multirelation& b) {
    return subseteq(a, b) && a.pairs().size() < b.pairs().size();
}

namespace {

// Reused composition workspace; the vectors keep their capacity across
// calls. One instance per thread, so concurrent callers stay independent.
struct SeqScratch {
    std::vector<std::uint32_t> image_offsets;  // n+1 offsets into images
    std::vector<std::uint32_t> images;         // images grouped by element
    std::vector<bool> seen;                    // partial-union dedup
    std::vector<bool> emitted;                 // per-source-element dedup
    std::vector<std::uint32_t> partial, next, touched, results;
    std::vector<Multirelation::Pair> out;
};

}  // namespace

Multirelation seq(const Multirelation& r, const Multirelation& s) {
    require_same_universe(r.universe(), s.universe(), "sequential composition");
    const Universe& u = r.universe();
    const std::size_t n = u.size();

    thread_local SeqScratch scratch;

    // Images of each element under s, grouped contiguously; s.pairs() is
    // sorted by element already.
    scratch.image_offsets.assign(n + 1, 0);
    scratch.images.clear();
    for (const auto& p : s.pairs()) {
        scratch.images.push_back(p.image);
        ++scratch.image_offsets[p.elem + 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
        scratch.image_offsets[i + 1] += scratch.image_offsets[i];
    }

    const std::uint32_t subsets = n >= 32 ? 0 : (1u << n);
    if (scratch.seen.size() < subsets) scratch.seen.assign(subsets, false);
    if (scratch.emitted.size() < subsets) scratch.emitted.assign(subsets, false);
    auto& seen = scratch.seen;
    auto& emitted = scratch.emitted;
    auto& partial = scratch.partial;
    auto& next = scratch.next;
    auto& touched = scratch.touched;
    auto& results = scratch.results;
    auto& out = scratch.out;
    out.clear();

    // Source pairs are grouped by element; achievable unions are collected
    // and deduplicated per group, so the output comes out sorted.
    const auto& rp = r.pairs();
    for (std::size_t i = 0; i < rp.size();) {
        const std::uint32_t elem = rp[i].elem;
        results.clear();
        for (; i < rp.size() && rp[i].elem == elem; ++i) {
            const std::uint32_t source_image = rp[i].image;
            if (source_image == 0) {
                if (!emitted[0]) {
                    emitted[0] = true;
                    results.push_back(0);  // empty choice function
                }
                continue;
            }
            partial.assign(1, 0);
            bool feasible = true;
            for (std::uint32_t b = 0; b < n && feasible; ++b) {
                if (!((source_image >> b) & 1u)) continue;
                const std::uint32_t begin = scratch.image_offsets[b];
                const std::uint32_t end = scratch.image_offsets[b + 1];
                if (begin == end) {
                    feasible = false;
                    break;
                }
                next.clear();
                touched.clear();
                for (std::uint32_t acc : partial) {
                    for (std::uint32_t k = begin; k < end; ++k) {
                        const std::uint32_t joined = acc | scratch.images[k];
                        if (!seen[joined]) {
                            seen[joined] = true;
                            touched.push_back(joined);
                            next.push_back(joined);
                        }
                    }
                }
                for (std::uint32_t t : touched) seen[t] = false;
                partial.swap(next);
            }
            if (!feasible) continue;
            for (std::uint32_t image : partial) {
                if (!emitted[image]) {
                    emitted[image] = true;
                    results.push_back(image);
                }
            }
        }
        std::sort(results.begin(), results.end());
        for (std::uint32_t image : results) {
            emitted[image] = false;
            out.push_back({elem, image});
        }
    }
    // one exact-sized allocation for the result
    return Multirelation(u, std::vector<Multirelation::Pair>(out.begin(), out.end()),
                         Multirelation::SortedUnique{});
}

Multirelation par(const Multirelation& r, const Multirelation& s) {
    require_same_universe(r.universe(), s.universe(), "parallel composition");
    std::vector<Multirelation::Pair> out;
    // Pairs are grouped by element, so walk matching runs.
    const auto& rp = r.pairs();
    const auto& sp = s.pairs();
    std::size_t i = 0, j = 0;
    while (i < rp.size() && j < sp.size()) {
        if (rp[i].elem < sp[j].elem) {
            ++i;
        } else if (sp[j].elem < rp[i].elem) {
            ++j;
        } else {
            const std::uint32_t elem = rp[i].elem;
            std::size_t i_end = i, j_end = j;
            while (i_end < rp.size() && rp[i_end].elem == elem) ++i_end;
            while (j_end < sp.size() && sp[j_end].elem == elem) ++j_end;
            for (std::size_t a = i; a < i_end; ++a) {
                for (std::size_t b = j; b < j_end; ++b) {
                    out.push_back({elem, rp[a].image | sp[b].image});
                }
            }
            i = i_end;
            j = j_end;
        }
    }
    return Multirelation(r.universe(), std::move(out));
}

bool is_subidentity(const Multirelation& r) {
    for (const auto& p : r.pairs()) {
        if (p.image != (1u << p.elem)) return false;
    }
    return true;
}

SubIdentity::SubIdentity(Multirelation rel) : rel_(std::move(rel)) {
    if (!is_subidentity(rel_)) {
        throw Error("not a subidentity: " + rel_.to_string());
    }
}

SubIdentity SubIdentity::lift(const ElementSet& set) {
    std::vector<Multirelation::Pair> pairs;
    for (std::uint32_t i = 0; i < set.universe().size(); ++i) {
        if (set.contains(i)) pairs.push_back({i, 1u << i});
    }
    return SubIdentity(Multirelation(set.universe(), std::move(pairs)), Unchecked{});
}

ElementSet SubIdentity::set() const {
    std::uint32_t bits = 0;
    for (const auto& p : rel_.pairs()) bits |= 1u << p.elem;
    return ElementSet(rel_.universe(), bits);
}

SubIdentity SubIdentity::complement() const {
    return lift(set().complement());
}

SubIdentity domain(const Multirelation& r) {
    std::uint32_t bits = 0;
    for (const auto& p : r.pairs()) bits |= 1u << p.elem;
    return SubIdentity::lift(ElementSet(r.universe(), bits));
}

SubIdentity antidomain(const Multirelation& r) {
    std::uint32_t bits = 0;
    for (const auto& p : r.pairs()) bits |= 1u << p.elem;
    return SubIdentity::lift(ElementSet(r.universe(), ~bits & r.universe().full_mask()));
}

}  // namespace mrel
