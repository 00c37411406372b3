// Acceptance suite: runs every acceptance criterion at its stated
// tolerance and prints one pass/fail line per criterion. All value checks
// are exact; the only tolerances are the per-criterion wall-clock limits.
//
// Usage: mrel_acceptance [path-to-cli]
// When the CLI path is given, criterion 7 also exercises the binary end
// to end (golden output, byte-identical reports, exit codes).

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mrel/counterexamples.hpp"
#include "mrel/env_io.hpp"
#include "mrel/finite_algebra.hpp"
#include "mrel/laws.hpp"
#include "mrel/modal.hpp"
#include "mrel/star.hpp"
#include "oracles.hpp"

using namespace mrel;
using M = Multirelation;

namespace {

struct Failure {
    std::string detail;
};

class Check {
  public:
    void require(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) details_.push_back(what);
    }
    bool ok() const { return details_.empty(); }
    std::size_t checks() const { return checks_; }
    const std::vector<std::string>& details() const { return details_; }

  private:
    std::size_t checks_ = 0;
    std::vector<std::string> details_;
};

M rel(const Universe& u, const std::string& literal) {
    return parse_relation_literal(u, literal);
}

std::string g_cli_path;

int run_cli(const std::string& args, std::string& out) {
    out.clear();
    const std::string cmd = "'" + g_cli_path + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return -1;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

// ---- criterion 1: worked examples ------------------------------------

void criterion_worked_examples(Check& c) {
    Universe u({"a", "b", "c"});
    {
        const M R = rel(u, "{ a -> {b, c} }");
        const M S = rel(u, "{ b -> {b} }");
        const M T = rel(u, "{ b -> {b}, c -> {} }");
        c.require(seq(R, S) == M::empty(u), "R ; S must be empty");
        c.require(seq(R, T) == rel(u, "{ a -> {b} }"), "R ; T must be { a -> {b} }");
        c.require(seq(T, S) == T, "T ; S must equal T");
    }
    {
        const M R = rel(u, "{ a -> {a, b} }");
        const M S = rel(u, "{ a -> {b, c}, b -> {b} }");
        const M T = rel(u, "{ b -> {} }");
        c.require(par(R, S) == rel(u, "{ a -> {a, b, c} }"),
                  "R || S must be { a -> {a, b, c} }");
        c.require(par(S, T) == rel(u, "{ b -> {b} }"), "S || T must be { b -> {b} }");
    }
}

// ---- criterion 2: counterexample registry ----------------------------

void criterion_counterexamples(Check& c) {
    const SuiteReport report = run_counterexamples();
    c.require(report.laws.size() == counterexample_registry().size(),
              "registry record count");
    c.require(report.laws.size() == 12, "twelve stored witnesses");
    for (const auto& lr : report.laws) {
        c.require(lr.as_expected(), "witness " + lr.id + " must reproduce exactly:\n" +
                                        lr.first_witness);
    }
}

// ---- criterion 3: law soundness at desk scale ------------------------

void criterion_law_soundness(Check& c) {
    SuiteConfig cfg;  // the default plan is the acceptance plan
    const SuiteReport report = run_suite(cfg);
    for (const auto& lr : report.laws) {
        c.require(lr.as_expected(),
                  "law " + lr.id + " failed:\n" + lr.first_witness);
        if (lr.polarity != Polarity::ExpectedValid) continue;
        const Law* law = find_law(lr.id);
        std::size_t x1_expected = 1;
        for (const VarKind kind : law->signature) {
            x1_expected *= kind == VarKind::Mrel ? 4 : 2;
        }
        std::size_t x2_expected = 1;
        for (const VarKind kind : law->signature) {
            x2_expected *= kind == VarKind::Mrel ? 256 : 4;
        }
        bool has_x1 = false, has_x2 = false;
        std::size_t x3_checked = 0;
        for (const auto& phase : lr.phases) {
            if (phase.phase == "x1-exhaustive" && phase.checked == x1_expected) {
                has_x1 = true;
            }
            if (phase.phase == "x2-exhaustive" && phase.checked == x2_expected) {
                has_x2 = true;
            }
            if (phase.phase == "x3-random") x3_checked = phase.checked;
        }
        c.require(has_x1, "law " + lr.id + " missing the full size-1 sweep");
        if (law->arity() <= 2) {
            c.require(has_x2, "law " + lr.id + " missing the full size-2 sweep");
        }
        if (law->arity() > 2 || law->star_law) {
            c.require(x3_checked >= 500,
                      "law " + lr.id + " needs >= 500 size-3 samples");
        }
    }
}

// ---- criterion 4: oracle equivalence ----------------------------------

void criterion_oracles(Check& c) {
    {
        Universe u({"a", "b"});
        const auto all = all_multirelations(u);
        bool seq_ok = true;
        for (const M& r : all) {
            for (const M& s : all) {
                if (seq(r, s) != testing::seq_oracle(r, s)) seq_ok = false;
            }
        }
        c.require(seq_ok, "seq differs from the choice-function oracle at size 2");
        bool modal_ok = true;
        for (const M& r : all) {
            for (const SubIdentity& p : all_subidentities(u)) {
                if (diamond(r, p) != diamond_direct(r, p)) modal_ok = false;
                if (box(r, p) != box_direct(r, p)) modal_ok = false;
            }
        }
        c.require(modal_ok, "modal operators differ from their direct forms at size 2");
    }
    {
        Universe u({"a", "b", "c"});
        Rng rng(20240505);
        bool ok = true;
        for (int i = 0; i < 1000; ++i) {
            const M r = random_multirelation(rng, u);
            const M s = random_multirelation(rng, u);
            if (seq(r, s) != testing::seq_oracle(r, s)) ok = false;
            const SubIdentity p = random_subidentity(rng, u);
            if (diamond(r, p) != diamond_direct(r, p)) ok = false;
            if (box(r, p) != box_direct(r, p)) ok = false;
        }
        c.require(ok, "size-3 random sweep (1000 pairs) disagrees with the oracles");
    }
}

// ---- criterion 5: star laws -------------------------------------------

void criterion_star_laws(Check& c) {
    for (const std::string& prefix : {std::string("star."), std::string("box.star")}) {
        SuiteConfig cfg;
        cfg.size = 3;
        cfg.mode = SuiteMode::Random;
        cfg.samples = 200;
        cfg.filter = prefix;
        const SuiteReport report = run_suite(cfg);
        for (const auto& lr : report.laws) {
            c.require(lr.as_expected(), "star law " + lr.id + " failed:\n" +
                                            lr.first_witness);
            c.require(lr.checked >= 200, "star law " + lr.id + " needs >= 200 samples");
        }
    }
    // finite powers stabilize exactly at the least fixpoint
    Universe u({"a", "b", "c"});
    Rng rng(20240506);
    bool stable_ok = true;
    for (int i = 0; i < 200; ++i) {
        const M r = random_multirelation(rng, u);
        M prev = approx_power(r, 0);
        std::size_t n = 0;
        while (true) {
            const M next = approx_power(r, n + 1);
            if (next == prev) break;
            prev = next;
            ++n;
        }
        if (prev != star(r)) stable_ok = false;
    }
    c.require(stable_ok, "stabilized finite power must equal the star");
    // strict fusion failure on the stored witness
    const Counterexample& fix = witness_for_law("neg.fusion_eq");
    const M R = fix.env.lookup("R");
    const M S = fix.env.lookup("S");
    c.require(proper_subset(seq(star(R), S), binary_star(R, S)),
              "bstar(R, S) must strictly exceed R^* ; S on the stored witness");
}

// ---- criterion 6: finite models ----------------------------------------

void criterion_finite_models(Check& c) {
    const auto builtins = builtin_models();
    c.require(builtins.size() == 2, "two builtin models");
    for (const auto& alg : builtins) {
        c.require(check_table_axioms(alg, AlgebraSystem::DpTrioid).ok,
                  alg.name + " must pass dp-trioid");
    }
    const FiniteAlgebra& chain4 = builtins[0];
    const int a = 1, one_sig = 3;
    bool unique = true;
    for (int y = 0; y < 4; ++y) {
        if (chain4.plus_at(a, y) == one_sig && y != one_sig) unique = false;
    }
    c.require(unique, "chain4: only 1sig completes a to the top");
    c.require(chain4.seq_at(one_sig, a) == a, "chain4: 1sig ; a = a");
    c.require(complemented_elements(chain4) == std::vector<int>{0, 3},
              "chain4: complemented elements are exactly 0 and 1sig");

    const FiniteAlgebra& chain3 = builtins[1];
    c.require(table_diamond(chain3, chain3.unit_par, chain3.zero) == chain3.zero,
              "chain3: <1p>0 = 0");
    c.require(table_diamond(chain3, chain3.unit_par, chain3.zero) != chain3.unit_seq,
              "chain3: <1p>0 differs from 1s");

    const FiniteAlgebra reified = reify_multirelations(Universe({"a"}));
    c.require(check_table_axioms(reified, AlgebraSystem::ApBiKleene).ok,
              "reified size-1 multirelation algebra must pass ap-bi-kleene");
}

// ---- criterion 7: determinism and round trips --------------------------

void criterion_determinism(Check& c) {
    {
        SuiteConfig cfg;
        cfg.size = 3;
        cfg.mode = SuiteMode::Random;
        cfg.samples = 60;
        cfg.filter = "dia.";
        const SuiteReport a = run_suite(cfg);
        const SuiteReport b = run_suite(cfg);
        c.require(a.to_text() == b.to_text(), "text reports must be byte-identical");
        c.require(a.to_json() == b.to_json(), "json reports must be byte-identical");
        SuiteConfig other = cfg;
        other.seed = 43;
        c.require(run_suite(other).ok(), "alternate seed must still pass");
    }
    {
        // save then load is the identity on canonical environments
        Rng rng(20240507);
        Universe u({"a", "b", "c"});
        for (int i = 0; i < 20; ++i) {
            Environment env(u);
            env.bind("R", random_multirelation(rng, u));
            env.bind("p", random_subidentity(rng, u).rel());
            const std::string text = env_to_text(env);
            c.require(parse_env(text) == env, "environment round trip");
            c.require(env_to_text(parse_env(text)) == text, "canonical stability");
        }
        for (const Counterexample& ce : counterexample_registry()) {
            c.require(parse_env(env_to_text(ce.env)) == ce.env,
                      "witness env round trip: " + ce.id);
        }
    }
    {
        // printed evaluation results re-parse to the same value
        Universe u({"a", "b", "c"});
        Rng rng(20240508);
        Environment env(u);
        env.bind("R", random_multirelation(rng, u));
        env.bind("S", random_multirelation(rng, u));
        env.bind("p", random_subidentity(rng, u).rel());
        const char* const exprs[] = {
            "R ; S", "R || S + S", "<R> p", "[R] p", "d(R) ; S",
            "a(R + S)", "R^*", "bstar(R, S)", "<R^*> p ; S", "R ; (S || 1p)",
        };
        for (const char* text : exprs) {
            const M value = eval_term(parse_term(text), env);
            c.require(parse_relation_literal(u, value.to_string()) == value,
                      std::string("eval output must re-parse: ") + text);
        }
    }
    if (g_cli_path.empty()) return;

    const auto env_path = temp_file("mrel_acceptance_env.mrel");
    {
        std::ofstream out(env_path);
        out << "universe a b\nrel R\na -> {}\nend\n";
    }
    std::string out1, out2;
    int code = run_cli("eval --env '" + env_path.string() + "' --term 'd(R)'", out1);
    c.require(code == 0 && out1 == "{ a -> {a} }\n",
              "cli eval golden output, got [" + out1 + "]");
    code = run_cli("eval --env '" + env_path.string() + "' --term 'd(R'", out1);
    c.require(code == 2, "cli eval syntax error must exit 2");
    code = run_cli("eval --env '" + env_path.string() + "' --term 'Q'", out1);
    c.require(code == 2, "cli eval unbound variable must exit 2");
    code = run_cli("eval --no-such-flag", out1);
    c.require(code == 2, "cli usage error must exit 2");

    code = run_cli("laws --size 1 --mode exhaustive", out1);
    c.require(code == 0, "cli laws size-1 exhaustive must exit 0");
    code = run_cli("laws --size 1 --mode exhaustive", out2);
    c.require(code == 0 && out1 == out2, "cli laws reports must be byte-identical");
    code = run_cli("laws --size 2 --mode exhaustive --filter proto.", out1);
    c.require(code == 0, "cli laws proto sweep at size 2 must exit 0");
    code = run_cli("laws --size 3 --samples 50 --filter star. --seed 7", out1);
    code = run_cli("laws --size 3 --samples 50 --filter star. --seed 7", out2);
    c.require(code == 0 && out1 == out2, "cli seeded star runs must be identical");

    code = run_cli("counterexamples", out1);
    c.require(code == 0 && out1.find("RESULT PASS") != std::string::npos,
              "cli counterexamples must pass");

    const auto seg_path = temp_file("mrel_acceptance_seg.mrel");
    {
        std::ofstream out(seg_path);
        out << "universe a b c\nrel R\na -> {b, c}\nb -> {b}\nb -> {c}\nc -> {c}\n"
               "end\n";
    }
    code = run_cli("star --env '" + seg_path.string() + "' --rel R --trace", out1);
    c.require(code == 0 &&
                  out1.find("limit: { a -> {a}, a -> {c}, a -> {b, c}, b -> {b}, "
                            "b -> {c}, c -> {c} }") != std::string::npos &&
                  out1.find("stabilized at step 3") != std::string::npos,
              "cli star trace output");

    code = run_cli("models --builtin", out1);
    c.require(code == 0 && out1.find("check chain4 dp-trioid: PASS") !=
                               std::string::npos,
              "cli builtin models must pass");

    const auto alg_path = temp_file("mrel_acceptance_alg.txt");
    {
        std::ofstream out(alg_path);
        out << builtin_models()[1].to_text();
    }
    code = run_cli("models --check '" + alg_path.string() + "' --system dp-trioid",
                   out1);
    c.require(code == 0, "cli models check must exit 0 on a valid model");
    code = run_cli("models --check '" + alg_path.string() + "' --system ap-trioid",
                   out1);
    c.require(code == 2, "cli models check must exit 2 when a table is missing");
    code = run_cli("models --search --system dp-trioid --size 3", out1);
    c.require(code == 0 && out1.find("models=") != std::string::npos,
              "cli model search must report a count");
}

struct Criterion {
    std::string id;
    std::string label;
    double limit_seconds;  // 0 means unbounded
    std::function<void(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];

    const std::vector<Criterion> criteria = {
        {"criterion-1", "worked-example-reproduction", 1.0, criterion_worked_examples},
        {"criterion-2", "counterexample-registry", 5.0, criterion_counterexamples},
        {"criterion-3", "law-soundness-desk-scale", 300.0, criterion_law_soundness},
        {"criterion-4", "oracle-equivalence", 120.0, criterion_oracles},
        {"criterion-5", "star-laws", 120.0, criterion_star_laws},
        {"criterion-6", "finite-models", 10.0, criterion_finite_models},
        {"criterion-7", "determinism-and-round-trip", 0.0, criterion_determinism},
    };

    int failed = 0;
    for (const Criterion& criterion : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("unexpected exception: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        const bool in_time = criterion.limit_seconds == 0.0 ||
                             elapsed <= criterion.limit_seconds;
        const bool ok = check.ok() && in_time;
        if (!ok) ++failed;
        std::printf("%s %s %s checks=%zu time=%.2fs", ok ? "PASS" : "FAIL",
                    criterion.id.c_str(), criterion.label.c_str(), check.checks(),
                    elapsed);
        if (criterion.limit_seconds > 0.0) {
            std::printf(" (limit %.0fs)", criterion.limit_seconds);
        }
        std::printf("\n");
        if (!in_time) std::printf("  over the time limit\n");
        for (const auto& detail : check.details()) {
            std::printf("  %s\n", detail.c_str());
        }
    }
    std::printf("ACCEPTANCE %s %zu/%zu\n", failed == 0 ? "PASS" : "FAIL",
                criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
