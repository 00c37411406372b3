#include "mrel/star.hpp"

namespace mrel {

std::size_t default_max_steps(const Universe& u) {
    return static_cast<std::size_t>(1) << (u.size() + 4);
}

FixpointTrace lfp_iterate(const std::function<Multirelation(const Multirelation&)>& f,
                          const Universe& u, std::size_t max_steps) {
    if (max_steps < 1) throw Error("lfp_iterate: max_steps must be at least 1");
    FixpointTrace trace;
    trace.iterates.push_back(Multirelation::empty(u));
    for (std::size_t step = 0; step <= max_steps; ++step) {
        const Multirelation& current = trace.iterates.back();
        Multirelation next = f(current);
        if (next == current) {
            trace.stabilized_at = trace.iterates.size() - 1;
            return trace;
        }
        if (!subseteq(current, next)) {
            throw Error("lfp_iterate: ascent is not a chain (function not isotone?)");
        }
        trace.iterates.push_back(std::move(next));
    }
    throw Error("lfp_iterate: no stabilization within " + std::to_string(max_steps) +
                " steps");
}

FixpointTrace star_trace(const Multirelation& r) {
    const Universe& u = r.universe();
    const Multirelation one = Multirelation::unit_seq(u);
    return lfp_iterate([&](const Multirelation& x) { return one | seq(r, x); }, u,
                       default_max_steps(u));
}

Multirelation star(const Multirelation& r) { return star_trace(r).limit(); }

Multirelation binary_star(const Multirelation& r, const Multirelation& s) {
    require_same_universe(r.universe(), s.universe(), "binary star");
    const Universe& u = r.universe();
    return lfp_iterate([&](const Multirelation& x) { return s | seq(r, x); }, u,
                       default_max_steps(u))
        .limit();
}

Multirelation approx_power(const Multirelation& r, std::size_t n) {
    const Universe& u = r.universe();
    const Multirelation one = Multirelation::unit_seq(u);
    Multirelation acc = Multirelation::empty(u);
    for (std::size_t i = 0; i < n; ++i) acc = one | seq(r, acc);
    return acc;
}

}  // namespace mrel
