#include "mrel/laws.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include <json.hpp>

#include "mrel/modal.hpp"
#include "mrel/star.hpp"

namespace mrel {

namespace {

using M = Multirelation;

constexpr VarKind MM = VarKind::Mrel;
constexpr VarKind SS = VarKind::Subid;

LawResult pass() { return {true, {}}; }

LawResult eq(const M& l, const M& r) {
    if (l == r) return pass();
    return {false, "lhs = " + l.to_string() + "\nrhs = " + r.to_string()};
}

LawResult leq(const M& l, const M& r) {
    if (subseteq(l, r)) return pass();
    return {false, "lhs = " + l.to_string() + "\nrhs = " + r.to_string() +
                       "\nlhs is not included in rhs"};
}

LawResult implies(bool antecedent, LawResult consequent) {
    if (!antecedent) return pass();
    return consequent;
}

LawResult iff(bool l, bool r) {
    if (l == r) return pass();
    return {false, std::string("lhs holds: ") + (l ? "yes" : "no") +
                       ", rhs holds: " + (r ? "yes" : "no")};
}

SubIdentity SI(const M& p) { return SubIdentity(p); }

M dd(const M& x) { return domain(x).rel(); }
M aa(const M& x) { return antidomain(x).rel(); }
M dia(const M& x, const M& p) { return diamond(x, SI(p)).rel(); }
M boxm(const M& x, const M& p) { return box(x, SI(p)).rel(); }

SubIdentity sparse_subidentity(Rng& rng, const Universe& u) {
    const auto bits = static_cast<std::uint32_t>(
        rng.bits(static_cast<unsigned>(u.size())) &
        rng.bits(static_cast<unsigned>(u.size())));
    return SubIdentity::lift(ElementSet(u, bits));
}

std::vector<Law> build_registry() {
    std::vector<Law> laws;
    auto reg = [&laws](std::string id, std::string anchor, std::vector<VarKind> sig,
                       std::function<LawResult(const Universe&, const std::vector<M>&)>
                           check) -> Law& {
        laws.push_back(Law{std::move(id), std::move(anchor), Polarity::ExpectedValid,
                           std::move(sig), false, std::move(check), nullptr, {}});
        return laws.back();
    };

    // --- proto-trioid axioms -------------------------------------------

    reg("proto.add_assoc", "x + (y + z) = (x + y) + z", {MM, MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(v[0] | (v[1] | v[2]), (v[0] | v[1]) | v[2]);
        });
    reg("proto.add_comm", "x + y = y + x", {MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(v[0] | v[1], v[1] | v[0]);
        });
    reg("proto.add_zero", "x + 0 = x", {MM},
        [](const Universe& u, const std::vector<M>& v) {
            return eq(v[0] | M::empty(u), v[0]);
        });
    reg("proto.add_idem", "x + x = x", {MM},
        [](const Universe&, const std::vector<M>& v) { return eq(v[0] | v[0], v[0]); });
    reg("proto.seq_left_unit", "1s ; x = x", {MM},
        [](const Universe& u, const std::vector<M>& v) {
            return eq(seq(M::unit_seq(u), v[0]), v[0]);
        });
    reg("proto.seq_right_unit", "x ; 1s = x", {MM},
        [](const Universe& u, const std::vector<M>& v) {
            return eq(seq(v[0], M::unit_seq(u)), v[0]);
        });
    reg("proto.seq_left_subdistr", "x ; y + x ; z <= x ; (y + z)", {MM, MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return leq(seq(v[0], v[1]) | seq(v[0], v[2]), seq(v[0], v[1] | v[2]));
        });
    reg("proto.right_distr", "(x + y) ; z = x ; z + y ; z", {MM, MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(seq(v[0] | v[1], v[2]), seq(v[0], v[2]) | seq(v[1], v[2]));
        });
    reg("proto.seq_left_annih", "0 ; x = 0", {MM},
        [](const Universe& u, const std::vector<M>& v) {
            return eq(seq(M::empty(u), v[0]), M::empty(u));
        });
    reg("proto.par_assoc", "x || (y || z) = (x || y) || z", {MM, MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(par(v[0], par(v[1], v[2])), par(par(v[0], v[1]), v[2]));
        });
    reg("proto.par_comm", "x || y = y || x", {MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(par(v[0], v[1]), par(v[1], v[0]));
        });
    reg("proto.par_unit", "1p || x = x", {MM},
        [](const Universe& u, const std::vector<M>& v) {
            return eq(par(M::unit_par(u), v[0]), v[0]);
        });
    reg("proto.par_distr", "x || (y + z) = x || y + x || z", {MM, MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(par(v[0], v[1] | v[2]), par(v[0], v[1]) | par(v[0], v[2]));
        });
    reg("proto.par_annih", "0 || x = 0", {MM},
        [](const Universe& u, const std::vector<M>& v) {
            return eq(par(M::empty(u), v[0]), M::empty(u));
        });

    // --- domain axioms (dp-trioid column, plus the star pair) ----------

    reg("dp.assoc_left", "d(w) ; (y ; z) = (d(w) ; y) ; z", {MM, MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(seq(dd(v[0]), seq(v[1], v[2])), seq(seq(dd(v[0]), v[1]), v[2]));
        });
    reg("dp.assoc_mid", "x ; (d(w) ; z) = (x ; d(w)) ; z", {MM, MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(seq(v[0], seq(dd(v[1]), v[2])), seq(seq(v[0], dd(v[1])), v[2]));
        });
    reg("dp.assoc_right", "x ; (y ; d(w)) = (x ; y) ; d(w)", {MM, MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(seq(v[0], seq(v[1], dd(v[2]))), seq(seq(v[0], v[1]), dd(v[2])));
        });
    reg("dp.left_preserve", "x <= d(x) ; x", {MM},
        [](const Universe&, const std::vector<M>& v) {
            return leq(v[0], seq(dd(v[0]), v[0]));
        });
    reg("dp.locality", "d(x ; y) = d(x ; d(y))", {MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(dd(seq(v[0], v[1])), dd(seq(v[0], dd(v[1]))));
        });
    reg("dp.additivity", "d(x + y) = d(x) + d(y)", {MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(dd(v[0] | v[1]), dd(v[0]) | dd(v[1]));
        });
    reg("dp.subid", "d(x) <= 1s", {MM},
        [](const Universe& u, const std::vector<M>& v) {
            return leq(dd(v[0]), M::unit_seq(u));
        });
    reg("dp.strict", "d(0) = 0", {},
        [](const Universe& u, const std::vector<M>&) {
            return eq(dd(M::empty(u)), M::empty(u));
        });
    reg("dp.interaction", "(x || y) ; d(z) = (x ; d(z)) || (y ; d(z))", {MM, MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(seq(par(v[0], v[1]), dd(v[2])),
                      par(seq(v[0], dd(v[2])), seq(v[1], dd(v[2]))));
        });
    reg("dp.par_domain", "d(x || y) = d(x) ; d(y)", {MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(dd(par(v[0], v[1])), seq(dd(v[0]), dd(v[1])));
        });
    reg("dp.par_meet", "d(x) || d(y) = d(x) ; d(y)", {MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(par(dd(v[0]), dd(v[1])), seq(dd(v[0]), dd(v[1])));
        });
    {
        Law& l = reg("dp.star_unfold", "1s + x ; x^* <= x^*", {MM},
                     [](const Universe& u, const std::vector<M>& v) {
                         const M st = star(v[0]);
                         return leq(M::unit_seq(u) | seq(v[0], st), st);
                     });
        l.star_law = true;
    }
    {
        Law& l = reg("dp.star_induct", "d(z) + x ; y <= y => x^* ; d(z) <= y",
                     {MM, MM, MM}, [](const Universe&, const std::vector<M>& v) {
                         return implies(subseteq(dd(v[2]) | seq(v[0], v[1]), v[1]),
                                        leq(seq(star(v[0]), dd(v[2])), v[1]));
                     });
        l.star_law = true;
        l.bias = [](Rng& rng, const Universe& u, std::vector<M>& v) {
            v[1] = seq(star(v[0]), dd(v[2])) | sparse_multirelation(rng, u);
        };
    }

    // --- antidomain axioms (ap-trioid column, plus the star pair) ------

    reg("ap.assoc_left", "a(w) ; (y ; z) = (a(w) ; y) ; z", {MM, MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(seq(aa(v[0]), seq(v[1], v[2])), seq(seq(aa(v[0]), v[1]), v[2]));
        });
    reg("ap.assoc_mid", "x ; (a(w) ; z) = (x ; a(w)) ; z", {MM, MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(seq(v[0], seq(aa(v[1]), v[2])), seq(seq(v[0], aa(v[1])), v[2]));
        });
    reg("ap.assoc_right", "x ; (y ; a(w)) = (x ; y) ; a(w)", {MM, MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(seq(v[0], seq(v[1], aa(v[2]))), seq(seq(v[0], v[1]), aa(v[2])));
        });
    reg("ap.left_annih", "a(x) ; x = 0", {MM},
        [](const Universe& u, const std::vector<M>& v) {
            return eq(seq(aa(v[0]), v[0]), M::empty(u));
        });
    reg("ap.locality", "a(x ; y) = a(x ; a(a(y)))", {MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(aa(seq(v[0], v[1])), aa(seq(v[0], aa(aa(v[1])))));
        });
    reg("ap.complement", "a(x) + a(a(x)) = 1s", {MM},
        [](const Universe& u, const std::vector<M>& v) {
            return eq(aa(v[0]) | aa(aa(v[0])), M::unit_seq(u));
        });
    reg("ap.left_distr", "a(x) ; (y + z) = a(x) ; y + a(x) ; z", {MM, MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(seq(aa(v[0]), v[1] | v[2]),
                      seq(aa(v[0]), v[1]) | seq(aa(v[0]), v[2]));
        });
    reg("ap.interaction", "(x || y) ; a(z) = (x ; a(z)) || (y ; a(z))", {MM, MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(seq(par(v[0], v[1]), aa(v[2])),
                      par(seq(v[0], aa(v[2])), seq(v[1], aa(v[2]))));
        });
    reg("ap.par_antidomain", "a(x || y) = a(x) + a(y)", {MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(aa(par(v[0], v[1])), aa(v[0]) | aa(v[1]));
        });
    reg("ap.par_meet", "a(x) || a(y) = a(x) ; a(y)", {MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(par(aa(v[0]), aa(v[1])), seq(aa(v[0]), aa(v[1])));
        });
    {
        Law& l = reg("ap.star_unfold", "1s + x ; x^* <= x^*", {MM},
                     [](const Universe& u, const std::vector<M>& v) {
                         const M st = star(v[0]);
                         return leq(M::unit_seq(u) | seq(v[0], st), st);
                     });
        l.star_law = true;
    }
    {
        Law& l = reg("ap.star_induct", "a(z) + x ; y <= y => x^* ; a(z) <= y",
                     {MM, MM, MM}, [](const Universe&, const std::vector<M>& v) {
                         return implies(subseteq(aa(v[2]) | seq(v[0], v[1]), v[1]),
                                        leq(seq(star(v[0]), aa(v[2])), v[1]));
                     });
        l.star_law = true;
        l.bias = [](Rng& rng, const Universe& u, std::vector<M>& v) {
            v[1] = seq(star(v[0]), aa(v[2])) | sparse_multirelation(rng, u);
        };
    }

    // --- derived sequential / parallel laws ----------------------------

    reg("seq.weak_assoc", "(x ; y) ; z <= x ; (y ; z)", {MM, MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return leq(seq(seq(v[0], v[1]), v[2]), seq(v[0], seq(v[1], v[2])));
        });
    {
        Law& l = reg("seq.left_isotone", "x <= y => z ; x <= z ; y", {MM, MM, MM},
                     [](const Universe&, const std::vector<M>& v) {
                         return implies(subseteq(v[0], v[1]),
                                        leq(seq(v[2], v[0]), seq(v[2], v[1])));
                     });
        l.bias = [](Rng& rng, const Universe& u, std::vector<M>& v) {
            v[1] = v[0] | sparse_multirelation(rng, u);
        };
    }
    {
        Law& l = reg("seq.right_isotone", "x <= y => x ; z <= y ; z", {MM, MM, MM},
                     [](const Universe&, const std::vector<M>& v) {
                         return implies(subseteq(v[0], v[1]),
                                        leq(seq(v[0], v[2]), seq(v[1], v[2])));
                     });
        l.bias = [](Rng& rng, const Universe& u, std::vector<M>& v) {
            v[1] = v[0] | sparse_multirelation(rng, u);
        };
    }
    reg("seq.interaction_sub", "(x || y) ; z <= (x ; z) || (y ; z)", {MM, MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return leq(seq(par(v[0], v[1]), v[2]),
                       par(seq(v[0], v[2]), seq(v[1], v[2])));
        });
    {
        Law& l = reg("par.left_isotone", "x <= y => z || x <= z || y", {MM, MM, MM},
                     [](const Universe&, const std::vector<M>& v) {
                         return implies(subseteq(v[0], v[1]),
                                        leq(par(v[2], v[0]), par(v[2], v[1])));
                     });
        l.bias = [](Rng& rng, const Universe& u, std::vector<M>& v) {
            v[1] = v[0] | sparse_multirelation(rng, u);
        };
    }
    {
        Law& l = reg("par.right_isotone", "x <= y => x || z <= y || z", {MM, MM, MM},
                     [](const Universe&, const std::vector<M>& v) {
                         return implies(subseteq(v[0], v[1]),
                                        leq(par(v[0], v[2]), par(v[1], v[2])));
                     });
        l.bias = [](Rng& rng, const Universe& u, std::vector<M>& v) {
            v[1] = v[0] | sparse_multirelation(rng, u);
        };
    }

    // --- subidentity laws ----------------------------------------------

    reg("subid.out_char", "x ; p keeps exactly the pairs of x with image inside p",
        {MM, SS}, [](const Universe& u, const std::vector<M>& v) {
            const std::uint32_t inside = SI(v[1]).set().bits();
            std::vector<M::Pair> keep;
            for (const auto& pr : v[0].pairs()) {
                if ((pr.image & ~inside) == 0) keep.push_back(pr);
            }
            return eq(seq(v[0], v[1]), M(u, std::move(keep)));
        });
    reg("subid.in_char", "p ; x keeps exactly the pairs of x with source in p",
        {SS, MM}, [](const Universe& u, const std::vector<M>& v) {
            const std::uint32_t inside = SI(v[0]).set().bits();
            std::vector<M::Pair> keep;
            for (const auto& pr : v[1].pairs()) {
                if ((inside >> pr.elem) & 1u) keep.push_back(pr);
            }
            return eq(seq(v[0], v[1]), M(u, std::move(keep)));
        });
    reg("subid.assoc_left", "(p ; y) ; z = p ; (y ; z)", {SS, MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(seq(seq(v[0], v[1]), v[2]), seq(v[0], seq(v[1], v[2])));
        });
    reg("subid.assoc_mid", "(x ; p) ; z = x ; (p ; z)", {MM, SS, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(seq(seq(v[0], v[1]), v[2]), seq(v[0], seq(v[1], v[2])));
        });
    reg("subid.assoc_right", "(x ; y) ; p = x ; (y ; p)", {MM, MM, SS},
        [](const Universe&, const std::vector<M>& v) {
            return eq(seq(seq(v[0], v[1]), v[2]), seq(v[0], seq(v[1], v[2])));
        });
    reg("subid.interaction", "(x || y) ; p = (x ; p) || (y ; p)", {MM, MM, SS},
        [](const Universe&, const std::vector<M>& v) {
            return eq(seq(par(v[0], v[1]), v[2]),
                      par(seq(v[0], v[2]), seq(v[1], v[2])));
        });
    reg("subid.left_distr", "p ; (y + z) = p ; y + p ; z", {SS, MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(seq(v[0], v[1] | v[2]), seq(v[0], v[1]) | seq(v[0], v[2]));
        });

    // --- domain laws -----------------------------------------------------

    reg("dom.preserve", "d(x) ; x = x", {MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(seq(dd(v[0]), v[0]), v[0]);
        });
    reg("dom.par_inter", "d(x || y) = d(x) & d(y)", {MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(dd(par(v[0], v[1])), dd(v[0]) & dd(v[1]));
        });
    {
        Law& l = reg("dom.isotone", "x <= y => d(x) <= d(y)", {MM, MM},
                     [](const Universe&, const std::vector<M>& v) {
                         return implies(subseteq(v[0], v[1]), leq(dd(v[0]), dd(v[1])));
                     });
        l.bias = [](Rng& rng, const Universe& u, std::vector<M>& v) {
            v[1] = v[0] | sparse_multirelation(rng, u);
        };
    }
    reg("dom.comp_bound", "d(x ; y) <= d(x)", {MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return leq(dd(seq(v[0], v[1])), dd(v[0]));
        });
    reg("dom.subid_below", "p <= 1s => p <= d(p)", {SS},
        [](const Universe&, const std::vector<M>& v) { return leq(v[0], dd(v[0])); });
    reg("dom.export", "d(d(x) ; y) = d(x) ; d(y)", {MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(dd(seq(dd(v[0]), v[1])), seq(dd(v[0]), dd(v[1])));
        });
    reg("dom.retraction", "d(d(x)) = d(x)", {MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(dd(dd(v[0])), dd(v[0]));
        });
    {
        Law& l = reg("dom.least_preserve", "x <= d(y) ; x <=> d(x) <= d(y)", {MM, MM},
                     [](const Universe&, const std::vector<M>& v) {
                         return iff(subseteq(v[0], seq(dd(v[1]), v[0])),
                                    subseteq(dd(v[0]), dd(v[1])));
                     });
        l.bias = [](Rng&, const Universe&, std::vector<M>& v) {
            v[0] = seq(dd(v[1]), v[0]);
        };
    }
    reg("dom.zero_right", "d(x) ; 0 = 0", {MM},
        [](const Universe& u, const std::vector<M>& v) {
            return eq(seq(dd(v[0]), M::empty(u)), M::empty(u));
        });
    reg("dom.strict_iff", "d(x) = 0 <=> x = 0", {MM},
        [](const Universe& u, const std::vector<M>& v) {
            return iff(dd(v[0]) == M::empty(u), v[0] == M::empty(u));
        });
    reg("dom.sum_expand", "d(x) <= d(x + y)", {MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return leq(dd(v[0]), dd(v[0] | v[1]));
        });
    reg("dom.par_unit", "d(1p) = 1s", {},
        [](const Universe& u, const std::vector<M>&) {
            return eq(dd(M::unit_par(u)), M::unit_seq(u));
        });
    reg("dom.par_hom", "d(x || y) = d(x) || d(y)", {MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(dd(par(v[0], v[1])), par(dd(v[0]), dd(v[1])));
        });
    reg("dom.par_closed", "d(d(x) || d(y)) = d(x) || d(y)", {MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(dd(par(dd(v[0]), dd(v[1]))), par(dd(v[0]), dd(v[1])));
        });
    reg("dom.par_idem", "d(x) || d(x) = d(x)", {MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(par(dd(v[0]), dd(v[0])), dd(v[0]));
        });

    // --- antidomain laws -------------------------------------------------

    reg("anti.compl_def", "a(x) = 1s - d(x)", {MM},
        [](const Universe& u, const std::vector<M>& v) {
            return eq(aa(v[0]), M::unit_seq(u) - dd(v[0]));
        });
    reg("anti.double", "d(x) = a(a(x))", {MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(dd(v[0]), aa(aa(v[0])));
        });
    reg("anti.dom_fix", "d(a(x)) = a(x)", {MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(dd(aa(v[0])), aa(v[0]));
        });
    reg("anti.locality_dom", "a(x ; y) = a(x ; d(y))", {MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(aa(seq(v[0], v[1])), aa(seq(v[0], dd(v[1]))));
        });
    reg("anti.compl_sum", "a(x) + d(x) = 1s", {MM},
        [](const Universe& u, const std::vector<M>& v) {
            return eq(aa(v[0]) | dd(v[0]), M::unit_seq(u));
        });
    reg("anti.de_morgan_plus", "a(x + y) = a(x) ; a(y)", {MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(aa(v[0] | v[1]), seq(aa(v[0]), aa(v[1])));
        });
    reg("anti.subid", "a(x) <= 1s", {MM},
        [](const Universe& u, const std::vector<M>& v) {
            return leq(aa(v[0]), M::unit_seq(u));
        });
    reg("anti.idem", "a(x) ; a(x) = a(x)", {MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(seq(aa(v[0]), aa(v[0])), aa(v[0]));
        });
    reg("anti.unit_iff", "a(x) = 1s <=> x = 0", {MM},
        [](const Universe& u, const std::vector<M>& v) {
            return iff(aa(v[0]) == M::unit_seq(u), v[0] == M::empty(u));
        });
    {
        Law& l = reg("anti.greatest_annih", "a(x) ; y = 0 <=> a(x) <= a(y)", {MM, MM},
                     [](const Universe& u, const std::vector<M>& v) {
                         return iff(seq(aa(v[0]), v[1]) == M::empty(u),
                                    subseteq(aa(v[0]), aa(v[1])));
                     });
        l.bias = [](Rng&, const Universe&, std::vector<M>& v) {
            v[1] = seq(dd(v[0]), v[1]);
        };
    }
    {
        Law& l = reg("anti.antitone", "x <= y => a(y) <= a(x)", {MM, MM},
                     [](const Universe&, const std::vector<M>& v) {
                         return implies(subseteq(v[0], v[1]), leq(aa(v[1]), aa(v[0])));
                     });
        l.bias = [](Rng& rng, const Universe& u, std::vector<M>& v) {
            v[1] = v[0] | sparse_multirelation(rng, u);
        };
    }
    reg("anti.meet_dom_zero", "a(x) ; a(y) ; d(x + y) = 0", {MM, MM},
        [](const Universe& u, const std::vector<M>& v) {
            return eq(seq(seq(aa(v[0]), aa(v[1])), dd(v[0] | v[1])), M::empty(u));
        });
    reg("anti.export", "a(a(x) ; y) = d(x) + a(y)", {MM, MM},
        [](const Universe&, const std::vector<M>& v) {
            return eq(aa(seq(aa(v[0]), v[1])), dd(v[0]) | aa(v[1]));
        });

    // --- diamond laws ----------------------------------------------------

    reg("dia.additive_left", "<x + y> p = <x> p + <y> p", {MM, MM, SS},
        [](const Universe&, const std::vector<M>& v) {
            return eq(dia(v[0] | v[1], v[2]), dia(v[0], v[2]) | dia(v[1], v[2]));
        });
    reg("dia.seq", "<x ; y> p = <x> <y> p", {MM, MM, SS},
        [](const Universe&, const std::vector<M>& v) {
            return eq(dia(seq(v[0], v[1]), v[2]), dia(v[0], dia(v[1], v[2])));
        });
    reg("dia.test", "<d(x)> p = d(x) ; d(p)", {MM, SS},
        [](const Universe&, const std::vector<M>& v) {
            return eq(dia(dd(v[0]), v[1]), seq(dd(v[0]), dd(v[1])));
        });
    reg("dia.par", "<x || y> p = <x> p ; <y> p", {MM, MM, SS},
        [](const Universe&, const std::vector<M>& v) {
            return eq(dia(par(v[0], v[1]), v[2]), seq(dia(v[0], v[2]), dia(v[1], v[2])));
        });
    reg("dia.zero", "<0> p = 0", {SS},
        [](const Universe& u, const std::vector<M>& v) {
            return eq(dia(M::empty(u), v[0]), M::empty(u));
        });
    reg("dia.unit", "<1s> p = p", {SS},
        [](const Universe& u, const std::vector<M>& v) {
            return eq(dia(M::unit_seq(u), v[0]), v[0]);
        });
    {
        Law& l = reg("dia.demodalisation", "<x> p <= q <=> x ; p <= q ; x",
                     {MM, SS, SS}, [](const Universe&, const std::vector<M>& v) {
                         return iff(subseteq(dia(v[0], v[1]), v[2]),
                                    subseteq(seq(v[0], v[1]), seq(v[2], v[0])));
                     });
        l.bias = [](Rng& rng, const Universe& u, std::vector<M>& v) {
            v[2] = dia(v[0], v[1]) | sparse_subidentity(rng, u).rel();
        };
    }

    // --- box laws --------------------------------------------------------

    reg("box.additive_left", "[x + y] p = [x] p ; [y] p", {MM, MM, SS},
        [](const Universe&, const std::vector<M>& v) {
            return eq(boxm(v[0] | v[1], v[2]), seq(boxm(v[0], v[2]), boxm(v[1], v[2])));
        });
    reg("box.seq", "[x ; y] p = [x] [y] p", {MM, MM, SS},
        [](const Universe&, const std::vector<M>& v) {
            return eq(boxm(seq(v[0], v[1]), v[2]), boxm(v[0], boxm(v[1], v[2])));
        });
    reg("box.test", "[d(x)] p = a(x) + d(p)", {MM, SS},
        [](const Universe&, const std::vector<M>& v) {
            return eq(boxm(dd(v[0]), v[1]), aa(v[0]) | dd(v[1]));
        });
    {
        Law& l = reg("box.par", "[x || y] p = [x] p + [y] p", {MM, MM, SS},
                     [](const Universe&, const std::vector<M>& v) {
                         return eq(boxm(par(v[0], v[1]), v[2]),
                                   boxm(v[0], v[2]) | boxm(v[1], v[2]));
                     });
        l.note = "paper_discrepancy: the documented concurrency box axiom "
                 "shows [x || y] p = [x] p ; [y] p, but the De Morgan dual of "
                 "<x || y> p = <x> p ; <y> p is the join, not the meet; the "
                 "meet form is refuted by x = 0, y = 1p, p = 0";
    }
    reg("box.dual", "[x] p = a(<x> a(p))", {MM, SS},
        [](const Universe&, const std::vector<M>& v) {
            const SubIdentity p = SI(v[1]);
            return eq(boxm(v[0], v[1]), diamond(v[0], p.complement()).complement().rel());
        });
    {
        Law& l = reg("box.star_unfold", "p ; [x] [x^*] p = [x^*] p", {MM, SS},
                     [](const Universe&, const std::vector<M>& v) {
                         const M st = star(v[0]);
                         return eq(seq(v[1], boxm(v[0], boxm(st, v[1]))),
                                   boxm(st, v[1]));
                     });
        l.star_law = true;
        l.note = "paper_discrepancy: documented with constant 1s in place of p "
                 "on the left; the De Morgan dual of p + <x> <x^*> p = <x^*> p "
                 "is the form checked here";
    }
    {
        Law& l = reg("box.star_induct", "p <= [x] p => p <= [x^*] p", {MM, SS},
                     [](const Universe&, const std::vector<M>& v) {
                         return implies(subseteq(v[1], boxm(v[0], v[1])),
                                        leq(v[1], boxm(star(v[0]), v[1])));
                     });
        l.star_law = true;
        l.bias = [](Rng& rng, const Universe& u, std::vector<M>& v) {
            v[1] = boxm(star(v[0]), random_subidentity(rng, u).rel());
        };
    }

    // --- star laws ---------------------------------------------------------

    {
        Law& l = reg("star.unfold", "1s + x ; x^* = x^*", {MM},
                     [](const Universe& u, const std::vector<M>& v) {
                         const M st = star(v[0]);
                         return eq(M::unit_seq(u) | seq(v[0], st), st);
                     });
        l.star_law = true;
    }
    {
        Law& l = reg("star.induction", "p + x ; y <= y => x^* ; p <= y",
                     {MM, SS, MM}, [](const Universe&, const std::vector<M>& v) {
                         return implies(subseteq(v[1] | seq(v[0], v[2]), v[2]),
                                        leq(seq(star(v[0]), v[1]), v[2]));
                     });
        l.star_law = true;
        l.bias = [](Rng& rng, const Universe& u, std::vector<M>& v) {
            v[2] = seq(star(v[0]), v[1]) | sparse_multirelation(rng, u);
        };
    }
    {
        Law& l = reg("star.bin_unfold", "y + x ; bstar(x, y) = bstar(x, y)", {MM, MM},
                     [](const Universe&, const std::vector<M>& v) {
                         const M bst = binary_star(v[0], v[1]);
                         return eq(v[1] | seq(v[0], bst), bst);
                     });
        l.star_law = true;
    }
    {
        Law& l = reg("star.fusion_sub", "x^* ; y <= bstar(x, y)", {MM, MM},
                     [](const Universe&, const std::vector<M>& v) {
                         return leq(seq(star(v[0]), v[1]), binary_star(v[0], v[1]));
                     });
        l.star_law = true;
    }
    {
        Law& l = reg("star.fusion_assoc", "bstar(x, y) ; z <= bstar(x, y ; z)",
                     {MM, MM, MM}, [](const Universe&, const std::vector<M>& v) {
                         return leq(seq(binary_star(v[0], v[1]), v[2]),
                                    binary_star(v[0], seq(v[1], v[2])));
                     });
        l.star_law = true;
    }
    {
        Law& l = reg("star.subid_fusion", "bstar(x, p) = x^* ; p", {MM, SS},
                     [](const Universe&, const std::vector<M>& v) {
                         return eq(binary_star(v[0], v[1]), seq(star(v[0]), v[1]));
                     });
        l.star_law = true;
    }
    {
        Law& l = reg("star.simulation", "x ; p <= p ; y => x^* ; p <= p ; y^*",
                     {MM, SS, MM}, [](const Universe&, const std::vector<M>& v) {
                         return implies(
                             subseteq(seq(v[0], v[1]), seq(v[1], v[2])),
                             leq(seq(star(v[0]), v[1]), seq(v[1], star(v[2]))));
                     });
        l.star_law = true;
        l.bias = [](Rng&, const Universe&, std::vector<M>& v) {
            v[0] = seq(v[1], v[2]);
        };
    }
    {
        Law& l = reg("star.dia_unfold", "p + <x> <x^*> p = <x^*> p", {MM, SS},
                     [](const Universe&, const std::vector<M>& v) {
                         const M st = star(v[0]);
                         return eq(v[1] | dia(v[0], dia(st, v[1])), dia(st, v[1]));
                     });
        l.star_law = true;
    }
    {
        Law& l = reg("star.dia_induct", "<x> p <= p => <x^*> p <= p", {MM, SS},
                     [](const Universe&, const std::vector<M>& v) {
                         return implies(subseteq(dia(v[0], v[1]), v[1]),
                                        leq(dia(star(v[0]), v[1]), v[1]));
                     });
        l.star_law = true;
        l.bias = [](Rng& rng, const Universe& u, std::vector<M>& v) {
            v[1] = dia(star(v[0]), random_subidentity(rng, u).rel());
        };
    }
    {
        Law& l = reg("star.dia_unfold_right", "p + <x^*> <x> p <= <x^*> p", {MM, SS},
                     [](const Universe&, const std::vector<M>& v) {
                         const M st = star(v[0]);
                         return leq(v[1] | dia(st, dia(v[0], v[1])), dia(st, v[1]));
                     });
        l.star_law = true;
    }
    {
        Law& l = reg("star.dia_induct_var", "p + <x> q <= q => <x^*> p <= q",
                     {MM, SS, SS}, [](const Universe&, const std::vector<M>& v) {
                         return implies(subseteq(v[1] | dia(v[0], v[2]), v[2]),
                                        leq(dia(star(v[0]), v[1]), v[2]));
                     });
        l.star_law = true;
        l.bias = [](Rng&, const Universe&, std::vector<M>& v) {
            v[2] = dia(star(v[0]), v[1]);
        };
    }
    {
        Law& l = reg("star.segerberg_conv", "p + <x^*> (<x> p - p) <= <x^*> p",
                     {MM, SS}, [](const Universe&, const std::vector<M>& v) {
                         const M st = star(v[0]);
                         return leq(v[1] | dia(st, dia(v[0], v[1]) - v[1]),
                                    dia(st, v[1]));
                     });
        l.star_law = true;
    }

    // --- expected-refutable laws (each has a stored witness) ---------------

    auto neg = [&laws](std::string id, std::string anchor, std::vector<VarKind> sig,
                       bool star_law,
                       std::function<LawResult(const Universe&, const std::vector<M>&)>
                           check) {
        laws.push_back(Law{std::move(id), std::move(anchor),
                           Polarity::ExpectedRefutable, std::move(sig), star_law,
                           std::move(check), nullptr, {}});
    };

    neg("neg.seq_assoc", "(x ; y) ; z = x ; (y ; z)", {MM, MM, MM}, false,
        [](const Universe&, const std::vector<M>& v) {
            return eq(seq(seq(v[0], v[1]), v[2]), seq(v[0], seq(v[1], v[2])));
        });
    neg("neg.left_distr", "x ; (y + z) = x ; y + x ; z", {MM, MM, MM}, false,
        [](const Universe&, const std::vector<M>& v) {
            return eq(seq(v[0], v[1] | v[2]), seq(v[0], v[1]) | seq(v[0], v[2]));
        });
    neg("neg.right_annih", "x ; 0 = 0", {MM}, false,
        [](const Universe& u, const std::vector<M>& v) {
            return eq(seq(v[0], M::empty(u)), M::empty(u));
        });
    neg("neg.interaction_conv", "(x ; z) || (y ; z) <= (x || y) ; z", {MM, MM, MM},
        false, [](const Universe&, const std::vector<M>& v) {
            return leq(par(seq(v[0], v[2]), seq(v[1], v[2])),
                       seq(par(v[0], v[1]), v[2]));
        });
    neg("neg.dia_additive", "<x> (p + q) = <x> p + <x> q", {MM, SS, SS}, false,
        [](const Universe&, const std::vector<M>& v) {
            return eq(dia(v[0], v[1] | v[2]), dia(v[0], v[1]) | dia(v[0], v[2]));
        });
    neg("neg.dia_strict", "<x> 0 = 0", {MM}, false,
        [](const Universe& u, const std::vector<M>& v) {
            return eq(dia(v[0], M::empty(u)), M::empty(u));
        });
    neg("neg.box_mult", "[x] (p ; q) = [x] p ; [x] q", {MM, SS, SS}, false,
        [](const Universe&, const std::vector<M>& v) {
            return eq(boxm(v[0], seq(v[1], v[2])),
                      seq(boxm(v[0], v[1]), boxm(v[0], v[2])));
        });
    neg("neg.box_costrict", "[x] 1s = 1s", {MM}, false,
        [](const Universe& u, const std::vector<M>& v) {
            return eq(boxm(v[0], M::unit_seq(u)), M::unit_seq(u));
        });
    neg("neg.conjugation", "<x> p ; q = 0 <=> p ; [x] q = 0", {MM, SS, SS}, false,
        [](const Universe& u, const std::vector<M>& v) {
            return iff(seq(dia(v[0], v[1]), v[2]) == M::empty(u),
                       seq(v[1], boxm(v[0], v[2])) == M::empty(u));
        });
    neg("neg.fusion_eq", "bstar(x, y) = x^* ; y", {MM, MM}, true,
        [](const Universe&, const std::vector<M>& v) {
            return eq(binary_star(v[0], v[1]), seq(star(v[0]), v[1]));
        });
    neg("neg.segerberg", "<x^*> p <= p + <x^*> (<x> p - p)", {MM, SS}, true,
        [](const Universe&, const std::vector<M>& v) {
            const M st = star(v[0]);
            return leq(dia(st, v[1]), v[1] | dia(st, dia(v[0], v[1]) - v[1]));
        });

    return laws;
}

}  // namespace

const std::vector<Law>& law_registry() {
    static const std::vector<Law> registry = build_registry();
    return registry;
}

const Law* find_law(const std::string& id) {
    for (const auto& law : law_registry()) {
        if (law.id == id) return &law;
    }
    return nullptr;
}

LawResult check_law(const Law& law, const Universe& u,
                    const std::vector<Multirelation>& values) {
    if (values.size() != law.signature.size()) {
        throw Error("law '" + law.id + "' expects " +
                    std::to_string(law.signature.size()) + " values, got " +
                    std::to_string(values.size()));
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        require_same_universe(u, values[i].universe(), "check_law");
        if (law.signature[i] == VarKind::Subid && !is_subidentity(values[i])) {
            throw Error("law '" + law.id + "': argument " + std::to_string(i) +
                        " must be a subidentity");
        }
    }
    return law.check(u, values);
}

namespace {

Universe universe_of_size(std::size_t n) {
    if (n > 26) throw Error("law sweeps support universes of at most 26 elements");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.emplace_back(1, static_cast<char>('a' + i));
    }
    return Universe(names);  // the universe cap still applies
}

std::string var_name(const std::vector<VarKind>& sig, std::size_t index) {
    static const char* const mrel_names[] = {"x", "y", "z", "w"};
    static const char* const subid_names[] = {"p", "q", "r", "s"};
    std::size_t nth = 0;
    for (std::size_t i = 0; i < index; ++i) {
        if (sig[i] == sig[index]) ++nth;
    }
    return sig[index] == VarKind::Mrel ? mrel_names[nth % 4] : subid_names[nth % 4];
}

std::string witness_text(const Universe& u, const std::vector<VarKind>& sig,
                         const std::vector<M>& values, const std::string& detail) {
    std::string out = "universe:";
    for (const auto& n : u.names()) out += " " + n;
    out += "\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += var_name(sig, i) + " = " + values[i].to_string() + "\n";
    }
    out += detail;
    return out;
}

void record(LawReport& report, const Universe& u, const Law& law,
            const std::vector<M>& values, const LawResult& result) {
    ++report.checked;
    if (!result.holds) {
        ++report.failures;
        if (report.first_witness.empty()) {
            report.first_witness = witness_text(u, law.signature, values, result.detail);
        }
    }
}

void run_exhaustive_phase(const Law& law, const Universe& u, const std::string& name,
                          LawReport& report) {
    const auto mrels = all_multirelations(u);
    const auto subids = all_subidentities(u);
    std::vector<std::size_t> sizes;
    for (const VarKind kind : law.signature) {
        sizes.push_back(kind == VarKind::Mrel ? mrels.size() : subids.size());
    }
    const auto value_at = [&](std::size_t slot, std::size_t index) -> const M& {
        return law.signature[slot] == VarKind::Mrel ? mrels[index]
                                                    : subids[index].rel();
    };
    std::vector<std::size_t> idx(law.signature.size(), 0);
    std::vector<M> values;
    for (std::size_t i = 0; i < idx.size(); ++i) values.push_back(value_at(i, 0));
    PhaseCount phase{name, 0};
    while (true) {
        record(report, u, law, values, law.check(u, values));
        ++phase.checked;
        // odometer step; only refresh the slots that moved
        std::size_t pos = idx.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < sizes[pos]) {
                values[pos] = value_at(pos, idx[pos]);
                break;
            }
            idx[pos] = 0;
            values[pos] = value_at(pos, 0);
            if (pos == 0) {
                report.phases.push_back(phase);
                return;
            }
        }
        if (idx.empty()) {  // arity-0 law: a single environment
            report.phases.push_back(phase);
            return;
        }
    }
}

void run_random_phase(const Law& law, const Universe& u, const std::string& name,
                      std::uint64_t seed, std::size_t samples, LawReport& report) {
    Rng rng(derive_seed(seed, law.id + ":" + name));
    std::vector<M> values;
    PhaseCount phase{name, 0};
    for (std::size_t i = 0; i < samples; ++i) {
        values.clear();
        for (const VarKind kind : law.signature) {
            values.push_back(kind == VarKind::Mrel
                                 ? random_multirelation(rng, u)
                                 : random_subidentity(rng, u).rel());
        }
        if (law.bias && i % 2 == 0) law.bias(rng, u, values);
        record(report, u, law, values, law.check(u, values));
        ++phase.checked;
    }
    report.phases.push_back(phase);
}

void run_witness_phase(const Law& law, LawReport& report);

void evaluate_phases(const SuiteConfig& config, const Law& law, LawReport& lr) {
    if (law.polarity == Polarity::ExpectedRefutable) {
        run_witness_phase(law, lr);
        return;
    }
    if (config.size) {
        const std::size_t n = *config.size;
        const SuiteMode mode =
            config.mode.value_or(n <= 2 ? SuiteMode::Exhaustive : SuiteMode::Random);
        const Universe u = universe_of_size(n);
        const std::string name = "x" + std::to_string(n);
        if (mode == SuiteMode::Exhaustive) {
            run_exhaustive_phase(law, u, name + "-exhaustive", lr);
        } else {
            run_random_phase(law, u, name + "-random", config.seed, config.samples, lr);
        }
        return;
    }
    run_exhaustive_phase(law, universe_of_size(1), "x1-exhaustive", lr);
    if (law.arity() <= config.exhaustive_arity_cap) {
        run_exhaustive_phase(law, universe_of_size(2), "x2-exhaustive", lr);
    }
    if (law.arity() > config.exhaustive_arity_cap || law.star_law) {
        run_random_phase(law, universe_of_size(3), "x3-random", config.seed,
                         config.samples, lr);
    }
}

void run_witness_phase(const Law& law, LawReport& report) {
    PhaseCount phase{"stored-witness", 0};
    try {
        const Counterexample& ce = witness_for_law(law.id);
        std::vector<M> values;
        for (const auto& name : ce.law_args) values.push_back(ce.env.lookup(name));
        const LawResult result = check_law(law, ce.env.universe(), values);
        ++report.checked;
        ++phase.checked;
        report.refuted = !result.holds;
        if (!report.refuted) {
            report.first_witness =
                witness_text(ce.env.universe(), law.signature, values,
                             "stored witness '" + ce.id + "' did not refute the law");
        }
    } catch (const Error& e) {
        report.refuted = false;
        report.first_witness = e.what();
    }
    report.phases.push_back(phase);
}

}  // namespace

bool LawReport::as_expected() const {
    if (polarity == Polarity::ExpectedRefutable) return refuted;
    return checked > 0 && failures == 0;
}

bool SuiteReport::ok() const {
    return std::all_of(laws.begin(), laws.end(),
                       [](const LawReport& r) { return r.as_expected(); });
}

SuiteReport run_suite(const SuiteConfig& config) {
    SuiteReport report;
    report.title = "law suite";
    report.seed = config.seed;
    {
        std::string line = "seed=" + std::to_string(config.seed) +
                           " samples=" + std::to_string(config.samples) + " size=";
        line += config.size ? std::to_string(*config.size) : std::string("default");
        line += " mode=";
        line += !config.mode ? "default"
                : (*config.mode == SuiteMode::Exhaustive ? "exhaustive" : "random");
        line += " filter=" + (config.filter.empty() ? std::string("(all)") : config.filter);
        line += " arity_cap=" + std::to_string(config.exhaustive_arity_cap);
        report.config_line = line;
    }

    if (config.size) {
        if (config.mode == SuiteMode::Exhaustive && *config.size > 2) {
            throw Error("exhaustive law sweeps are guarded to universes of size <= 2");
        }
        universe_of_size(*config.size);  // reject bad sizes before work starts
    }
    std::vector<const Law*> selected;
    for (const Law& law : law_registry()) {
        if (!config.filter.empty() && law.id.rfind(config.filter, 0) != 0) continue;
        selected.push_back(&law);
    }
    counterexample_registry();  // materialize before workers start

    report.laws.resize(selected.size());
    auto evaluate = [&config, &selected, &report](std::size_t index) {
        const Law& law = *selected[index];
        LawReport lr;
        lr.id = law.id;
        lr.anchor = law.anchor;
        lr.polarity = law.polarity;
        lr.note = law.note;
        try {
            evaluate_phases(config, law, lr);
        } catch (const std::exception& e) {
            ++lr.failures;
            lr.refuted = false;
            if (lr.first_witness.empty()) lr.first_witness = e.what();
        }
        report.laws[index] = std::move(lr);
    };

    // Laws are independent; evaluate them concurrently and keep registry
    // order in the report, so the output stays deterministic.
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                              selected.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < selected.size(); ++i) evaluate(i);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&cursor, &selected, &evaluate] {
                while (true) {
                    const std::size_t index = cursor.fetch_add(1);
                    if (index >= selected.size()) return;
                    evaluate(index);
                }
            });
        }
        for (auto& worker : pool) worker.join();
    }
    return report;
}

SuiteReport run_counterexamples() {
    SuiteReport report;
    report.title = "counterexample registry";
    report.config_line = "stored witnesses, exact replay";
    for (const Counterexample& ce : counterexample_registry()) {
        LawReport lr;
        lr.id = ce.id;
        lr.anchor = ce.anchor;
        lr.polarity = Polarity::ExpectedRefutable;
        for (const auto& note : ce.notes) {
            if (!lr.note.empty()) lr.note += " | ";
            lr.note += note;
        }
        const WitnessResult result = ce.replay(ce);
        lr.checked = result.checks.size();
        lr.refuted = result.ok();
        for (const auto& check : result.checks) {
            if (check.ok) continue;
            ++lr.failures;
            if (lr.first_witness.empty()) {
                lr.first_witness = "check '" + check.label + "'\nexpected = " +
                                   check.expected + "\ngot      = " + check.got;
            }
        }
        // The law this witness refutes must actually be refuted by it.
        if (!ce.refutes.empty()) {
            const Law* law = find_law(ce.refutes);
            if (law == nullptr) {
                lr.refuted = false;
                lr.first_witness = "unknown law id '" + ce.refutes + "'";
            } else {
                std::vector<M> values;
                for (const auto& name : ce.law_args) values.push_back(ce.env.lookup(name));
                ++lr.checked;
                if (check_law(*law, ce.env.universe(), values).holds) {
                    lr.refuted = false;
                    ++lr.failures;
                    if (lr.first_witness.empty()) {
                        lr.first_witness = "witness failed to refute " + ce.refutes;
                    }
                }
            }
        }
        report.laws.push_back(std::move(lr));
    }
    return report;
}

std::string SuiteReport::to_text() const {
    std::string out = "# " + title + "\n# " + config_line + "\n";
    std::size_t failed = 0;
    for (const LawReport& lr : laws) {
        const bool good = lr.as_expected();
        if (!good) ++failed;
        out += good ? "PASS " : "FAIL ";
        out += lr.id;
        out += lr.polarity == Polarity::ExpectedRefutable ? " refutable" : " valid";
        out += " checked=" + std::to_string(lr.checked);
        if (lr.polarity == Polarity::ExpectedRefutable) {
            out += lr.refuted ? " refuted=yes" : " refuted=no";
            out += " failures=" + std::to_string(lr.failures);
        } else {
            out += " failures=" + std::to_string(lr.failures);
        }
        out += " :: " + lr.anchor + "\n";
        if (!lr.note.empty()) out += "  note: " + lr.note + "\n";
        if (!good && !lr.first_witness.empty()) {
            std::string indented = "  ";
            for (const char c : lr.first_witness) {
                indented += c;
                if (c == '\n') indented += "  ";
            }
            out += indented + "\n";
        }
    }
    out += "RESULT " + std::string(failed == 0 ? "PASS" : "FAIL") +
           " laws=" + std::to_string(laws.size()) + " failed=" + std::to_string(failed) +
           "\n";
    return out;
}

std::string SuiteReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["title"] = title;
    doc["seed"] = seed;
    doc["config"] = config_line;
    doc["ok"] = ok();
    doc["laws"] = nlohmann::ordered_json::array();
    for (const LawReport& lr : laws) {
        nlohmann::ordered_json entry;
        entry["id"] = lr.id;
        entry["anchor"] = lr.anchor;
        entry["polarity"] =
            lr.polarity == Polarity::ExpectedRefutable ? "expected-refutable"
                                                       : "expected-valid";
        entry["checked"] = lr.checked;
        entry["failures"] = lr.failures;
        if (lr.polarity == Polarity::ExpectedRefutable) entry["refuted"] = lr.refuted;
        entry["as_expected"] = lr.as_expected();
        entry["phases"] = nlohmann::ordered_json::array();
        for (const auto& phase : lr.phases) {
            entry["phases"].push_back({{"phase", phase.phase},
                                       {"checked", phase.checked}});
        }
        if (!lr.note.empty()) entry["note"] = lr.note;
        if (!lr.first_witness.empty()) entry["witness"] = lr.first_witness;
        doc["laws"].push_back(std::move(entry));
    }
    return doc.dump(1);
}

}  // namespace mrel
