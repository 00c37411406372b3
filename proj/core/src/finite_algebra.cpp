#include "mrel/finite_algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mrel/env_io.hpp"
#include "mrel/generators.hpp"
#include "mrel/star.hpp"

namespace mrel {

AlgebraSystem parse_system(const std::string& name) {
    static const std::map<std::string, AlgebraSystem> table = {
        {"proto-dioid", AlgebraSystem::ProtoDioid},
        {"proto-trioid", AlgebraSystem::ProtoTrioid},
        {"dp-dioid", AlgebraSystem::DpDioid},
        {"dp-trioid", AlgebraSystem::DpTrioid},
        {"ap-dioid", AlgebraSystem::ApDioid},
        {"ap-trioid", AlgebraSystem::ApTrioid},
        {"dp-bi-kleene", AlgebraSystem::DpBiKleene},
        {"ap-bi-kleene", AlgebraSystem::ApBiKleene},
    };
    auto it = table.find(name);
    if (it == table.end()) throw Error("unknown axiom system '" + name + "'");
    return it->second;
}

std::string system_name(AlgebraSystem system) {
    switch (system) {
        case AlgebraSystem::ProtoDioid: return "proto-dioid";
        case AlgebraSystem::ProtoTrioid: return "proto-trioid";
        case AlgebraSystem::DpDioid: return "dp-dioid";
        case AlgebraSystem::DpTrioid: return "dp-trioid";
        case AlgebraSystem::ApDioid: return "ap-dioid";
        case AlgebraSystem::ApTrioid: return "ap-trioid";
        case AlgebraSystem::DpBiKleene: return "dp-bi-kleene";
        case AlgebraSystem::ApBiKleene: return "ap-bi-kleene";
    }
    throw Error("unknown axiom system");
}

void FiniteAlgebra::validate() const {
    const int n = static_cast<int>(size());
    if (n == 0) throw Error("algebra carrier is empty");
    auto check_unary = [n](const std::vector<int>& t, const char* what) {
        if (t.empty()) return;
        if (static_cast<int>(t.size()) != n) {
            throw Error(std::string(what) + " table has wrong size");
        }
        for (int v : t) {
            if (v < 0 || v >= n) throw Error(std::string(what) + " entry out of range");
        }
    };
    auto check_binary = [n](const std::vector<std::vector<int>>& t, const char* what) {
        if (t.empty()) return;
        if (static_cast<int>(t.size()) != n) {
            throw Error(std::string(what) + " table has wrong size");
        }
        for (const auto& row : t) {
            if (static_cast<int>(row.size()) != n) {
                throw Error(std::string(what) + " row has wrong size");
            }
            for (int v : row) {
                if (v < 0 || v >= n) {
                    throw Error(std::string(what) + " entry out of range");
                }
            }
        }
    };
    if (plus.empty() || seq.empty()) throw Error("plus and seq tables are required");
    check_binary(plus, "plus");
    check_binary(seq, "seq");
    check_binary(par, "par");
    check_unary(dom, "dom");
    check_unary(anti, "anti");
    check_unary(star, "star");
    auto in_range = [n](int v) { return v >= 0 && v < n; };
    if (!in_range(zero) || !in_range(unit_seq) || !in_range(unit_par)) {
        throw Error("constant index out of range");
    }
}

namespace {

struct TableAxiom {
    const char* name;
    int arity;
    bool (*holds)(const FiniteAlgebra&, int, int, int);
};

const TableAxiom kAxioms[] = {
    {"add-assoc", 3,
     [](const FiniteAlgebra& A, int x, int y, int z) {
         return A.plus_at(x, A.plus_at(y, z)) == A.plus_at(A.plus_at(x, y), z);
     }},
    {"add-comm", 2,
     [](const FiniteAlgebra& A, int x, int y, int) {
         return A.plus_at(x, y) == A.plus_at(y, x);
     }},
    {"add-idem", 1,
     [](const FiniteAlgebra& A, int x, int, int) { return A.plus_at(x, x) == x; }},
    {"add-zero", 1,
     [](const FiniteAlgebra& A, int x, int, int) { return A.plus_at(x, A.zero) == x; }},
    {"seq-left-unit", 1,
     [](const FiniteAlgebra& A, int x, int, int) {
         return A.seq_at(A.unit_seq, x) == x;
     }},
    {"seq-right-unit", 1,
     [](const FiniteAlgebra& A, int x, int, int) {
         return A.seq_at(x, A.unit_seq) == x;
     }},
    {"seq-left-subdistr", 3,
     [](const FiniteAlgebra& A, int x, int y, int z) {
         return A.le(A.plus_at(A.seq_at(x, y), A.seq_at(x, z)),
                     A.seq_at(x, A.plus_at(y, z)));
     }},
    {"seq-right-distr", 3,
     [](const FiniteAlgebra& A, int x, int y, int z) {
         return A.seq_at(A.plus_at(x, y), z) ==
                A.plus_at(A.seq_at(x, z), A.seq_at(y, z));
     }},
    {"seq-left-annih", 1,
     [](const FiniteAlgebra& A, int x, int, int) {
         return A.seq_at(A.zero, x) == A.zero;
     }},
    {"par-assoc", 3,
     [](const FiniteAlgebra& A, int x, int y, int z) {
         return A.par_at(x, A.par_at(y, z)) == A.par_at(A.par_at(x, y), z);
     }},
    {"par-comm", 2,
     [](const FiniteAlgebra& A, int x, int y, int) {
         return A.par_at(x, y) == A.par_at(y, x);
     }},
    {"par-unit", 1,
     [](const FiniteAlgebra& A, int x, int, int) {
         return A.par_at(A.unit_par, x) == x;
     }},
    {"par-distr", 3,
     [](const FiniteAlgebra& A, int x, int y, int z) {
         return A.par_at(x, A.plus_at(y, z)) ==
                A.plus_at(A.par_at(x, y), A.par_at(x, z));
     }},
    {"par-annih", 1,
     [](const FiniteAlgebra& A, int x, int, int) {
         return A.par_at(A.zero, x) == A.zero;
     }},
    {"dom-assoc-left", 3,
     [](const FiniteAlgebra& A, int x, int y, int z) {
         return A.seq_at(A.dom_at(x), A.seq_at(y, z)) ==
                A.seq_at(A.seq_at(A.dom_at(x), y), z);
     }},
    {"dom-assoc-mid", 3,
     [](const FiniteAlgebra& A, int x, int y, int z) {
         return A.seq_at(x, A.seq_at(A.dom_at(y), z)) ==
                A.seq_at(A.seq_at(x, A.dom_at(y)), z);
     }},
    {"dom-assoc-right", 3,
     [](const FiniteAlgebra& A, int x, int y, int z) {
         return A.seq_at(x, A.seq_at(y, A.dom_at(z))) ==
                A.seq_at(A.seq_at(x, y), A.dom_at(z));
     }},
    {"dom-left-preserve", 1,
     [](const FiniteAlgebra& A, int x, int, int) {
         return A.le(x, A.seq_at(A.dom_at(x), x));
     }},
    {"dom-locality", 2,
     [](const FiniteAlgebra& A, int x, int y, int) {
         return A.dom_at(A.seq_at(x, y)) == A.dom_at(A.seq_at(x, A.dom_at(y)));
     }},
    {"dom-additivity", 2,
     [](const FiniteAlgebra& A, int x, int y, int) {
         return A.dom_at(A.plus_at(x, y)) == A.plus_at(A.dom_at(x), A.dom_at(y));
     }},
    {"dom-subid", 1,
     [](const FiniteAlgebra& A, int x, int, int) {
         return A.le(A.dom_at(x), A.unit_seq);
     }},
    {"dom-strict", 0,
     [](const FiniteAlgebra& A, int, int, int) { return A.dom_at(A.zero) == A.zero; }},
    {"dom-interaction", 3,
     [](const FiniteAlgebra& A, int x, int y, int z) {
         return A.seq_at(A.par_at(x, y), A.dom_at(z)) ==
                A.par_at(A.seq_at(x, A.dom_at(z)), A.seq_at(y, A.dom_at(z)));
     }},
    {"dom-par-domain", 2,
     [](const FiniteAlgebra& A, int x, int y, int) {
         return A.dom_at(A.par_at(x, y)) == A.seq_at(A.dom_at(x), A.dom_at(y));
     }},
    {"dom-par-meet", 2,
     [](const FiniteAlgebra& A, int x, int y, int) {
         return A.par_at(A.dom_at(x), A.dom_at(y)) ==
                A.seq_at(A.dom_at(x), A.dom_at(y));
     }},
    {"anti-assoc-left", 3,
     [](const FiniteAlgebra& A, int x, int y, int z) {
         return A.seq_at(A.anti_at(x), A.seq_at(y, z)) ==
                A.seq_at(A.seq_at(A.anti_at(x), y), z);
     }},
    {"anti-assoc-mid", 3,
     [](const FiniteAlgebra& A, int x, int y, int z) {
         return A.seq_at(x, A.seq_at(A.anti_at(y), z)) ==
                A.seq_at(A.seq_at(x, A.anti_at(y)), z);
     }},
    {"anti-assoc-right", 3,
     [](const FiniteAlgebra& A, int x, int y, int z) {
         return A.seq_at(x, A.seq_at(y, A.anti_at(z))) ==
                A.seq_at(A.seq_at(x, y), A.anti_at(z));
     }},
    {"anti-left-annih", 1,
     [](const FiniteAlgebra& A, int x, int, int) {
         return A.seq_at(A.anti_at(x), x) == A.zero;
     }},
    {"anti-locality", 2,
     [](const FiniteAlgebra& A, int x, int y, int) {
         return A.anti_at(A.seq_at(x, y)) ==
                A.anti_at(A.seq_at(x, A.anti_at(A.anti_at(y))));
     }},
    {"anti-complement", 1,
     [](const FiniteAlgebra& A, int x, int, int) {
         return A.plus_at(A.anti_at(x), A.anti_at(A.anti_at(x))) == A.unit_seq;
     }},
    {"anti-left-distr", 3,
     [](const FiniteAlgebra& A, int x, int y, int z) {
         return A.seq_at(A.anti_at(x), A.plus_at(y, z)) ==
                A.plus_at(A.seq_at(A.anti_at(x), y), A.seq_at(A.anti_at(x), z));
     }},
    {"anti-interaction", 3,
     [](const FiniteAlgebra& A, int x, int y, int z) {
         return A.seq_at(A.par_at(x, y), A.anti_at(z)) ==
                A.par_at(A.seq_at(x, A.anti_at(z)), A.seq_at(y, A.anti_at(z)));
     }},
    {"anti-par-antidomain", 2,
     [](const FiniteAlgebra& A, int x, int y, int) {
         return A.anti_at(A.par_at(x, y)) == A.plus_at(A.anti_at(x), A.anti_at(y));
     }},
    {"anti-par-meet", 2,
     [](const FiniteAlgebra& A, int x, int y, int) {
         return A.par_at(A.anti_at(x), A.anti_at(y)) ==
                A.seq_at(A.anti_at(x), A.anti_at(y));
     }},
    {"star-unfold", 1,
     [](const FiniteAlgebra& A, int x, int, int) {
         return A.le(A.plus_at(A.unit_seq, A.seq_at(x, A.star_at(x))), A.star_at(x));
     }},
    {"dom-star-induct", 3,
     [](const FiniteAlgebra& A, int x, int y, int z) {
         if (!A.le(A.plus_at(A.dom_at(z), A.seq_at(x, y)), y)) return true;
         return A.le(A.seq_at(A.star_at(x), A.dom_at(z)), y);
     }},
    {"anti-star-induct", 3,
     [](const FiniteAlgebra& A, int x, int y, int z) {
         if (!A.le(A.plus_at(A.anti_at(z), A.seq_at(x, y)), y)) return true;
         return A.le(A.seq_at(A.star_at(x), A.anti_at(z)), y);
     }},
};

const TableAxiom& axiom_by_name(const std::string& name) {
    for (const TableAxiom& ax : kAxioms) {
        if (name == ax.name) return ax;
    }
    throw Error("unknown table axiom '" + name + "'");
}

const std::vector<std::string> kAddAxioms = {"add-assoc", "add-comm", "add-idem",
                                             "add-zero"};
const std::vector<std::string> kSeqAxioms = {"seq-left-unit", "seq-right-unit",
                                             "seq-left-subdistr", "seq-right-distr",
                                             "seq-left-annih"};
const std::vector<std::string> kParAxioms = {"par-assoc", "par-comm", "par-unit",
                                             "par-distr", "par-annih"};
const std::vector<std::string> kDomDioidAxioms = {
    "dom-assoc-left", "dom-assoc-mid",   "dom-assoc-right", "dom-left-preserve",
    "dom-locality",   "dom-additivity",  "dom-subid",       "dom-strict"};
const std::vector<std::string> kDomTrioidAxioms = {"dom-interaction", "dom-par-domain",
                                                   "dom-par-meet"};
const std::vector<std::string> kAntiDioidAxioms = {
    "anti-assoc-left", "anti-assoc-mid", "anti-assoc-right", "anti-left-annih",
    "anti-locality",   "anti-complement", "anti-left-distr"};
const std::vector<std::string> kAntiTrioidAxioms = {
    "anti-interaction", "anti-par-antidomain", "anti-par-meet"};

void append(std::vector<std::string>& out, const std::vector<std::string>& items) {
    out.insert(out.end(), items.begin(), items.end());
}

}  // namespace

std::vector<std::string> system_axioms(AlgebraSystem system) {
    std::vector<std::string> out;
    append(out, kAddAxioms);
    append(out, kSeqAxioms);
    switch (system) {
        case AlgebraSystem::ProtoDioid:
            break;
        case AlgebraSystem::ProtoTrioid:
            append(out, kParAxioms);
            break;
        case AlgebraSystem::DpDioid:
            append(out, kDomDioidAxioms);
            break;
        case AlgebraSystem::DpTrioid:
            append(out, kParAxioms);
            append(out, kDomDioidAxioms);
            append(out, kDomTrioidAxioms);
            break;
        case AlgebraSystem::ApDioid:
            append(out, kAntiDioidAxioms);
            break;
        case AlgebraSystem::ApTrioid:
            append(out, kParAxioms);
            append(out, kAntiDioidAxioms);
            append(out, kAntiTrioidAxioms);
            break;
        case AlgebraSystem::DpBiKleene:
            append(out, kParAxioms);
            append(out, kDomDioidAxioms);
            append(out, kDomTrioidAxioms);
            out.push_back("star-unfold");
            out.push_back("dom-star-induct");
            break;
        case AlgebraSystem::ApBiKleene:
            append(out, kParAxioms);
            append(out, kAntiDioidAxioms);
            append(out, kAntiTrioidAxioms);
            out.push_back("star-unfold");
            out.push_back("anti-star-induct");
            break;
    }
    return out;
}

namespace {

void require_tables(const FiniteAlgebra& A, AlgebraSystem system) {
    const std::string sys = system_name(system);
    const bool trioid = sys.find("trioid") != std::string::npos ||
                        sys.find("bi-kleene") != std::string::npos;
    if (trioid && !A.has_par()) {
        throw Error("system " + sys + " needs a par table");
    }
    if (sys.rfind("dp-", 0) == 0 && !A.has_dom() && !A.has_anti()) {
        throw Error("system " + sys + " needs a dom (or anti) table");
    }
    if (sys.rfind("ap-", 0) == 0 && !A.has_anti()) {
        throw Error("system " + sys + " needs an anti table");
    }
    if (sys.find("bi-kleene") != std::string::npos && !A.has_star()) {
        throw Error("system " + sys + " needs a star table");
    }
}

bool axiom_holds_everywhere(const FiniteAlgebra& A, const TableAxiom& ax,
                            AxiomFailure* failure) {
    const int n = static_cast<int>(A.size());
    const int nx = ax.arity >= 1 ? n : 1;
    const int ny = ax.arity >= 2 ? n : 1;
    const int nz = ax.arity >= 3 ? n : 1;
    for (int x = 0; x < nx; ++x) {
        for (int y = 0; y < ny; ++y) {
            for (int z = 0; z < nz; ++z) {
                if (ax.holds(A, x, y, z)) continue;
                if (failure != nullptr) {
                    failure->axiom = ax.name;
                    std::string inst;
                    if (ax.arity >= 1) inst += "x=" + A.carrier[x];
                    if (ax.arity >= 2) inst += " y=" + A.carrier[y];
                    if (ax.arity >= 3) inst += " z=" + A.carrier[z];
                    failure->instance = inst;
                }
                return false;
            }
        }
    }
    return true;
}

bool axioms_hold(const FiniteAlgebra& A, const std::vector<std::string>& names,
                 const std::string& skip) {
    for (const auto& name : names) {
        if (name == skip) continue;
        if (!axiom_holds_everywhere(A, axiom_by_name(name), nullptr)) return false;
    }
    return true;
}

}  // namespace

TableCheckResult check_table_axioms(const FiniteAlgebra& algebra,
                                    AlgebraSystem system) {
    algebra.validate();
    require_tables(algebra, system);
    TableCheckResult result;
    for (const auto& name : system_axioms(system)) {
        AxiomFailure failure;
        if (!axiom_holds_everywhere(algebra, axiom_by_name(name), &failure)) {
            result.ok = false;
            result.failures.push_back(failure);
        }
    }
    return result;
}

std::vector<int> complemented_elements(const FiniteAlgebra& A) {
    std::vector<int> out;
    const int n = static_cast<int>(A.size());
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (A.plus_at(x, y) == A.unit_seq && A.seq_at(y, x) == A.zero &&
                A.seq_at(x, y) == A.zero) {
                out.push_back(x);
                break;
            }
        }
    }
    return out;
}

std::vector<int> domain_image(const FiniteAlgebra& A) {
    std::vector<int> out;
    for (int x = 0; x < static_cast<int>(A.size()); ++x) out.push_back(A.dom_at(x));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int table_diamond(const FiniteAlgebra& A, int x, int y) {
    return A.dom_at(A.seq_at(x, y));
}

std::vector<FiniteAlgebra> builtin_models() {
    std::vector<FiniteAlgebra> out;

    // Four-element chain 0 < a < 1pi < 1sig. The subidentities form the
    // chain {0, a, 1sig}, so a has no complement: the only y with
    // a + y = 1sig is 1sig itself, and 1sig ; a = a, not 0.
    FiniteAlgebra chain4;
    chain4.name = "chain4";
    chain4.carrier = {"0", "a", "1pi", "1sig"};
    chain4.zero = 0;
    chain4.unit_seq = 3;
    chain4.unit_par = 2;
    chain4.plus = {{0, 1, 2, 3}, {1, 1, 2, 3}, {2, 2, 2, 3}, {3, 3, 3, 3}};
    chain4.seq = {{0, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 2, 2}, {0, 1, 2, 3}};
    chain4.par = {{0, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 2, 3}, {0, 1, 3, 3}};
    chain4.dom = {0, 1, 3, 3};
    chain4.notes = {
        "source tables carry two garbled rows; this ships the unique "
        "dp-trioid-consistent reading",
        "seq table: the row printed with label 0 and values a a a a is the "
        "row of a; forced reading a ; x = (0, a, a, a) by isotonicity and "
        "a <= d(a) ; a",
        "dom table: the row printed as a second 1pi entry is the row of "
        "1sig; d(1sig) = 1sig",
    };
    out.push_back(std::move(chain4));

    // Three-element chain 0 < 1sig < 1pi with par as meet. A dp-trioid in
    // which <1p> 0 = d(1p ; 0) = d(0) = 0 < 1s.
    FiniteAlgebra chain3;
    chain3.name = "chain3";
    chain3.carrier = {"0", "1sig", "1pi"};
    chain3.zero = 0;
    chain3.unit_seq = 1;
    chain3.unit_par = 2;
    chain3.plus = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
    chain3.seq = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
    chain3.par = {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};
    chain3.dom = {0, 1, 1};
    chain3.notes = {
        "diamond of the parallel unit is not co-strict here: d(1pi ; 0) = 0",
    };
    out.push_back(std::move(chain3));

    return out;
}

FiniteAlgebra reify_multirelations(const Universe& u) {
    const auto elems = all_multirelations(u);
    const std::size_t n = elems.size();

    auto index_of = [&u](const Multirelation& m) {
        std::uint64_t mask = 0;
        const std::size_t width = std::size_t{1} << u.size();
        for (const auto& p : m.pairs()) {
            mask |= std::uint64_t{1} << (p.elem * width + p.image);
        }
        return static_cast<int>(mask);
    };

    FiniteAlgebra A;
    A.name = "multirelations-" + std::to_string(u.size());
    for (std::size_t i = 0; i < n; ++i) A.carrier.push_back("m" + std::to_string(i));
    A.zero = index_of(Multirelation::empty(u));
    A.unit_seq = index_of(Multirelation::unit_seq(u));
    A.unit_par = index_of(Multirelation::unit_par(u));
    A.plus.assign(n, std::vector<int>(n, 0));
    A.seq.assign(n, std::vector<int>(n, 0));
    A.par.assign(n, std::vector<int>(n, 0));
    A.dom.assign(n, 0);
    A.anti.assign(n, 0);
    A.star.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            A.plus[i][j] = index_of(elems[i] | elems[j]);
            A.seq[i][j] = index_of(seq(elems[i], elems[j]));
            A.par[i][j] = index_of(par(elems[i], elems[j]));
        }
        A.dom[i] = index_of(domain(elems[i]).rel());
        A.anti[i] = index_of(antidomain(elems[i]).rel());
        A.star[i] = index_of(star(elems[i]));
        A.notes.push_back(A.carrier[i] + " = " + elems[i].to_string());
    }
    return A;
}

bool same_tables(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return a.size() == b.size() && a.zero == b.zero && a.unit_seq == b.unit_seq &&
           a.unit_par == b.unit_par && a.plus == b.plus && a.seq == b.seq &&
           a.par == b.par && a.dom == b.dom && a.anti == b.anti && a.star == b.star;
}

FiniteAlgebra reindex(const FiniteAlgebra& A, const std::vector<int>& perm) {
    if (perm.size() != A.size()) throw Error("reindex: wrong permutation size");
    const std::size_t n = A.size();
    FiniteAlgebra B;
    B.name = A.name;
    B.notes = A.notes;
    B.carrier.assign(n, "");
    for (std::size_t i = 0; i < n; ++i) B.carrier[perm[i]] = A.carrier[i];
    auto map_binary = [&](const std::vector<std::vector<int>>& t) {
        std::vector<std::vector<int>> out;
        if (t.empty()) return out;
        out.assign(n, std::vector<int>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                out[perm[i]][perm[j]] = perm[t[i][j]];
            }
        }
        return out;
    };
    auto map_unary = [&](const std::vector<int>& t) {
        std::vector<int> out;
        if (t.empty()) return out;
        out.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) out[perm[i]] = perm[t[i]];
        return out;
    };
    B.plus = map_binary(A.plus);
    B.seq = map_binary(A.seq);
    B.par = map_binary(A.par);
    B.dom = map_unary(A.dom);
    B.anti = map_unary(A.anti);
    B.star = map_unary(A.star);
    B.zero = perm[A.zero];
    B.unit_seq = perm[A.unit_seq];
    B.unit_par = perm[A.unit_par];
    return B;
}

std::string FiniteAlgebra::to_text() const {
    std::string out;
    for (const auto& note : notes) out += "# " + note + "\n";
    if (!name.empty()) out += "algebra " + name + "\n";
    out += "carrier";
    for (const auto& c : carrier) out += " " + c;
    out += "\n";
    out += "const zero " + carrier[zero] + "\n";
    out += "const unit_seq " + carrier[unit_seq] + "\n";
    out += "const unit_par " + carrier[unit_par] + "\n";
    auto emit_binary = [&](const char* label, const std::vector<std::vector<int>>& t) {
        if (t.empty()) return;
        out += std::string("table ") + label + "\n";
        for (const auto& row : t) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j != 0) out += " ";
                out += carrier[row[j]];
            }
            out += "\n";
        }
    };
    auto emit_unary = [&](const char* label, const std::vector<int>& t) {
        if (t.empty()) return;
        out += std::string("table ") + label + "\n";
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (j != 0) out += " ";
            out += carrier[t[j]];
        }
        out += "\n";
    };
    emit_binary("plus", plus);
    emit_binary("seq", seq);
    emit_binary("par", par);
    emit_unary("dom", dom);
    emit_unary("anti", anti);
    emit_unary("star", star);
    return out;
}

FiniteAlgebra FiniteAlgebra::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    FiniteAlgebra A;
    std::map<std::string, int> index;

    auto next_words = [&](std::vector<std::string>& words) {
        words.clear();
        while (std::getline(in, raw)) {
            ++lineno;
            std::string line = raw;
            if (auto hash = line.find('#'); hash != std::string::npos) {
                line.erase(hash);
            }
            std::istringstream ls(line);
            std::string w;
            while (ls >> w) words.push_back(w);
            if (!words.empty()) return true;
        }
        return false;
    };

    auto element = [&](const std::string& name) {
        auto it = index.find(name);
        if (it == index.end()) {
            throw FileFormatError("unknown carrier element '" + name + "'", lineno);
        }
        return it->second;
    };

    std::vector<std::string> words;
    const bool binary_ops[] = {true, true, true, false, false, false};
    const char* const op_names[] = {"plus", "seq", "par", "dom", "anti", "star"};

    while (next_words(words)) {
        if (words[0] == "algebra") {
            if (words.size() != 2) throw FileFormatError("'algebra' takes a name", lineno);
            A.name = words[1];
        } else if (words[0] == "carrier") {
            if (words.size() < 2) throw FileFormatError("empty carrier", lineno);
            A.carrier.assign(words.begin() + 1, words.end());
            for (std::size_t i = 0; i < A.carrier.size(); ++i) {
                if (!index.emplace(A.carrier[i], static_cast<int>(i)).second) {
                    throw FileFormatError("duplicate carrier element", lineno);
                }
            }
        } else if (words[0] == "const") {
            if (words.size() != 3) throw FileFormatError("bad 'const' line", lineno);
            const int v = element(words[2]);
            if (words[1] == "zero") A.zero = v;
            else if (words[1] == "unit_seq") A.unit_seq = v;
            else if (words[1] == "unit_par") A.unit_par = v;
            else throw FileFormatError("unknown constant '" + words[1] + "'", lineno);
        } else if (words[0] == "table") {
            if (words.size() != 2) throw FileFormatError("bad 'table' line", lineno);
            if (A.carrier.empty()) {
                throw FileFormatError("'table' before 'carrier'", lineno);
            }
            const std::size_t n = A.carrier.size();
            int op = -1;
            for (int k = 0; k < 6; ++k) {
                if (words[1] == op_names[k]) op = k;
            }
            if (op < 0) throw FileFormatError("unknown table '" + words[1] + "'", lineno);
            const std::size_t rows = binary_ops[op] ? n : 1;
            std::vector<std::vector<int>> data;
            for (std::size_t r = 0; r < rows; ++r) {
                std::vector<std::string> row;
                if (!next_words(row)) {
                    throw FileFormatError("unexpected end of table", lineno);
                }
                if (row.size() != n) {
                    throw FileFormatError("table row has wrong width", lineno);
                }
                std::vector<int> cells;
                for (const auto& w : row) cells.push_back(element(w));
                data.push_back(std::move(cells));
            }
            switch (op) {
                case 0: A.plus = data; break;
                case 1: A.seq = data; break;
                case 2: A.par = data; break;
                case 3: A.dom = data[0]; break;
                case 4: A.anti = data[0]; break;
                case 5: A.star = data[0]; break;
            }
        } else {
            throw FileFormatError("unexpected '" + words[0] + "'", lineno);
        }
    }
    A.validate();
    return A;
}

namespace {

struct SearchState {
    const ModelSearchSpec* spec = nullptr;
    bool need_par = false;
    bool need_dom = false;
    bool need_anti = false;
    bool need_star = false;
    std::vector<std::string> stage_add, stage_seq, stage_par, stage_unary, stage_star;
    ModelSearchResult result;

    bool spend() {
        if (result.candidates >= spec->budget) {
            result.budget_exhausted = true;
            return false;
        }
        ++result.candidates;
        return true;
    }
    bool full() const { return result.models.size() >= spec->limit; }
};

}  // namespace

ModelSearchResult search_models(const ModelSearchSpec& spec) {
    if (spec.size < 2 || spec.size > 4) {
        throw Error("model search supports carrier sizes 2, 3 and 4");
    }
    if (!spec.require_property.empty() &&
        spec.require_property != "non-complemented-subidentity" &&
        spec.require_property != "diamond-par-unit-lt") {
        throw Error("unknown property '" + spec.require_property + "'");
    }
    const std::vector<std::string> axioms = system_axioms(spec.system);
    if (!spec.violate_axiom.empty() &&
        std::find(axioms.begin(), axioms.end(), spec.violate_axiom) == axioms.end()) {
        throw Error("axiom '" + spec.violate_axiom + "' is not part of " +
                    system_name(spec.system));
    }

    const int n = static_cast<int>(spec.size);
    const std::string sys = system_name(spec.system);
    SearchState st;
    st.spec = &spec;
    st.need_par = sys.find("trioid") != std::string::npos ||
                  sys.find("bi-kleene") != std::string::npos;
    st.need_dom = sys.rfind("dp-", 0) == 0;
    st.need_anti = sys.rfind("ap-", 0) == 0;
    st.need_star = sys.find("bi-kleene") != std::string::npos;

    const std::string& skip = spec.violate_axiom;
    const bool free_plus = skip.rfind("add-", 0) == 0;
    const bool free_seq = skip.rfind("seq-", 0) == 0;
    const bool free_par = skip.rfind("par-", 0) == 0;

    FiniteAlgebra A;
    A.carrier.push_back("0");
    A.carrier.push_back(n == 2 ? "1" : "1s");
    if (n >= 3) A.carrier.push_back("1p");
    for (int i = 3; i < n; ++i) A.carrier.push_back("e" + std::to_string(i));
    A.zero = 0;
    A.unit_seq = 1;
    A.unit_par = st.need_par ? (n >= 3 ? 2 : 1) : 1;
    A.plus.assign(n, std::vector<int>(n, 0));
    A.seq.assign(n, std::vector<int>(n, 0));
    if (st.need_par) A.par.assign(n, std::vector<int>(n, 0));
    if (st.need_dom) A.dom.assign(n, 0);
    if (st.need_anti) A.anti.assign(n, 0);
    if (st.need_star) A.star.assign(n, 0);

    // Free-cell lists per table, honoring pinned units and annihilators
    // unless the pinned law is itself the violation target.
    std::vector<std::pair<int, int>> plus_cells, seq_cells, par_cells;
    if (free_plus) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) plus_cells.push_back({i, j});
    } else {
        for (int i = 1; i < n; ++i) {
            A.plus[0][i] = i;
            A.plus[i][0] = i;
            A.plus[i][i] = i;
        }
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j < n; ++j) plus_cells.push_back({i, j});
    }
    if (free_seq) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) seq_cells.push_back({i, j});
    } else {
        for (int j = 0; j < n; ++j) A.seq[0][j] = 0;            // 0 ; x = 0
        for (int j = 0; j < n; ++j) A.seq[A.unit_seq][j] = j;   // 1s ; x = x
        for (int i = 0; i < n; ++i) A.seq[i][A.unit_seq] = i;   // x ; 1s = x
        for (int i = 1; i < n; ++i) {
            if (i == A.unit_seq) continue;
            for (int j = 0; j < n; ++j) {
                if (j == A.unit_seq) continue;
                seq_cells.push_back({i, j});
            }
        }
    }
    if (st.need_par) {
        if (free_par) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) par_cells.push_back({i, j});
        } else {
            for (int j = 0; j < n; ++j) {
                A.par[0][j] = 0;
                A.par[j][0] = 0;
                A.par[A.unit_par][j] = j;
                A.par[j][A.unit_par] = j;
            }
            for (int i = 1; i < n; ++i) {
                if (i == A.unit_par) continue;
                for (int j = i; j < n; ++j) {
                    if (j == A.unit_par) continue;
                    par_cells.push_back({i, j});
                }
            }
        }
    }
    std::vector<int> unary_cells;
    if (st.need_dom) {
        if (skip != "dom-strict") A.dom[0] = 0;
        for (int i = (skip == "dom-strict" ? 0 : 1); i < n; ++i) unary_cells.push_back(i);
    } else if (st.need_anti) {
        for (int i = 0; i < n; ++i) unary_cells.push_back(i);
    }

    // Per-stage axiom subsets (minus the violation target).
    auto stage = [&](const std::vector<std::string>& names) {
        std::vector<std::string> out;
        for (const auto& name : names) {
            if (std::find(axioms.begin(), axioms.end(), name) != axioms.end()) {
                out.push_back(name);
            }
        }
        return out;
    };
    st.stage_add = stage(kAddAxioms);
    st.stage_seq = stage(kSeqAxioms);
    st.stage_par = stage(kParAxioms);
    st.stage_unary = stage(kDomDioidAxioms);
    append(st.stage_unary, stage(kDomTrioidAxioms));
    append(st.stage_unary, stage(kAntiDioidAxioms));
    append(st.stage_unary, stage(kAntiTrioidAxioms));
    st.stage_star = stage({"star-unfold", "dom-star-induct", "anti-star-induct"});

    std::function<bool()> accept = [&]() {
        if (!spec.violate_axiom.empty()) {
            if (axiom_holds_everywhere(A, axiom_by_name(spec.violate_axiom), nullptr)) {
                return true;  // target not violated; keep searching
            }
        }
        if (spec.require_property == "non-complemented-subidentity") {
            const auto complemented = complemented_elements(A);
            bool found = false;
            for (int x = 0; x < n; ++x) {
                if (!A.le(x, A.unit_seq)) continue;
                if (std::find(complemented.begin(), complemented.end(), x) ==
                    complemented.end()) {
                    found = true;
                    break;
                }
            }
            if (!found) return true;
        } else if (spec.require_property == "diamond-par-unit-lt") {
            if (!(st.need_dom || st.need_anti)) {
                throw Error("property needs a domain operation");
            }
            if (table_diamond(A, A.unit_par, A.zero) == A.unit_seq) return true;
        }
        st.result.models.push_back(A);
        st.result.models.back().name =
            sys + "-" + std::to_string(st.result.models.size());
        return !st.full();
    };

    std::function<bool(std::size_t)> enum_star = [&](std::size_t at) -> bool {
        if (!st.need_star) return accept();
        if (at == static_cast<std::size_t>(n)) {
            if (!st.spend()) return false;
            if (!axioms_hold(A, st.stage_star, skip)) return true;
            return accept();
        }
        for (int v = 0; v < n; ++v) {
            A.star[at] = v;
            if (!enum_star(at + 1)) return false;
        }
        return true;
    };

    std::function<bool(std::size_t)> enum_unary = [&](std::size_t at) -> bool {
        if (unary_cells.empty() && at == 0) {
            if (st.need_dom || st.need_anti) {
                if (!axioms_hold(A, st.stage_unary, skip)) return true;
            }
            return enum_star(0);
        }
        if (at == unary_cells.size()) {
            if (!st.spend()) return false;
            if (!axioms_hold(A, st.stage_unary, skip)) return true;
            return enum_star(0);
        }
        auto& table = st.need_dom ? A.dom : A.anti;
        for (int v = 0; v < n; ++v) {
            table[unary_cells[at]] = v;
            if (!enum_unary(at + 1)) return false;
        }
        return true;
    };

    std::function<bool(std::size_t)> enum_par = [&](std::size_t at) -> bool {
        if (!st.need_par) return enum_unary(0);
        if (at == par_cells.size()) {
            if (!st.spend()) return false;
            if (!axioms_hold(A, st.stage_par, skip)) return true;
            return enum_unary(0);
        }
        auto [i, j] = par_cells[at];
        for (int v = 0; v < n; ++v) {
            A.par[i][j] = v;
            if (!free_par) A.par[j][i] = v;
            if (!enum_par(at + 1)) return false;
        }
        return true;
    };

    std::function<bool(std::size_t)> enum_seq = [&](std::size_t at) -> bool {
        if (at == seq_cells.size()) {
            if (!st.spend()) return false;
            if (!axioms_hold(A, st.stage_seq, skip)) return true;
            return enum_par(0);
        }
        auto [i, j] = seq_cells[at];
        for (int v = 0; v < n; ++v) {
            A.seq[i][j] = v;
            if (!enum_seq(at + 1)) return false;
        }
        return true;
    };

    std::function<bool(std::size_t)> enum_plus = [&](std::size_t at) -> bool {
        if (at == plus_cells.size()) {
            if (!st.spend()) return false;
            if (!axioms_hold(A, st.stage_add, skip)) return true;
            return enum_seq(0);
        }
        auto [i, j] = plus_cells[at];
        for (int v = 0; v < n; ++v) {
            A.plus[i][j] = v;
            if (!free_plus) A.plus[j][i] = v;
            if (!enum_plus(at + 1)) return false;
        }
        return true;
    };

    enum_plus(0);
    return std::move(st.result);
}

}  // namespace mrel
