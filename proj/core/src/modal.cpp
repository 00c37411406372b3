#include "mrel/modal.hpp"

namespace mrel {

SubIdentity diamond(const Multirelation& r, const SubIdentity& p) {
    return domain(seq(r, p.rel()));
}

SubIdentity diamond_direct(const Multirelation& r, const SubIdentity& p) {
    require_same_universe(r.universe(), p.universe(), "diamond");
    const std::uint32_t witness = p.set().bits();
    std::uint32_t bits = 0;
    for (const auto& pair : r.pairs()) {
        if ((pair.image & ~witness) == 0) bits |= 1u << pair.elem;
    }
    return SubIdentity::lift(ElementSet(r.universe(), bits));
}

SubIdentity box(const Multirelation& r, const SubIdentity& p) {
    return antidomain(seq(r, antidomain(p.rel()).rel()));
}

SubIdentity box_direct(const Multirelation& r, const SubIdentity& p) {
    require_same_universe(r.universe(), p.universe(), "box");
    const std::uint32_t witness = p.set().bits();
    std::uint32_t excluded = 0;
    for (const auto& pair : r.pairs()) {
        if ((pair.image & witness) == 0) excluded |= 1u << pair.elem;
    }
    return SubIdentity::lift(
        ElementSet(r.universe(), ~excluded & r.universe().full_mask()));
}

}  // namespace mrel
