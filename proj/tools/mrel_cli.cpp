// Command-line front end: evaluate terms over multirelation environments,
// run the law suite and the counterexample registry, inspect fixpoint
// traces, and check or search finite table models.
//
// Exit codes: 0 all checks as expected, 1 a law or witness check failed,
// 2 usage or input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mrel/env_io.hpp"
#include "mrel/finite_algebra.hpp"
#include "mrel/laws.hpp"
#include "mrel/star.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw mrel::Error("cannot write '" + path + "'");
    out << text;
}

int cmd_eval(const std::string& env_path, const std::string& term_text) {
    const mrel::Environment env = mrel::load_env_file(env_path);
    const mrel::TermPtr term = mrel::parse_term(term_text);
    std::cout << mrel::eval_term(term, env).to_string() << "\n";
    return kExitOk;
}

int cmd_laws(const mrel::SuiteConfig& config, const std::string& json_path) {
    const mrel::SuiteReport report = mrel::run_suite(config);
    std::cout << report.to_text();
    if (!json_path.empty()) write_file(json_path, report.to_json());
    return report.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_counterexamples(const std::string& json_path) {
    const mrel::SuiteReport report = mrel::run_counterexamples();
    std::cout << report.to_text();
    if (!json_path.empty()) write_file(json_path, report.to_json());
    return report.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_star(const std::string& env_path, const std::string& rel, bool trace) {
    const mrel::Environment env = mrel::load_env_file(env_path);
    const mrel::FixpointTrace fix = mrel::star_trace(env.lookup(rel));
    if (trace) {
        for (std::size_t i = 0; i < fix.iterates.size(); ++i) {
            std::cout << "step " << i << ": " << fix.iterates[i].to_string() << "\n";
        }
        std::cout << "stabilized at step " << fix.stabilized_at << "\n";
        std::cout << "limit: " << fix.limit().to_string() << "\n";
    } else {
        std::cout << fix.limit().to_string() << "\n";
    }
    return kExitOk;
}

void print_model_summary(const mrel::FiniteAlgebra& alg) {
    auto names = [&alg](const std::vector<int>& xs) {
        std::string out = "{";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            out += (i ? ", " : "") + alg.carrier[xs[i]];
        }
        return out + "}";
    };
    std::cout << "complemented elements: " << names(mrel::complemented_elements(alg))
              << "\n";
    if (alg.has_dom() || alg.has_anti()) {
        std::cout << "domain image: " << names(mrel::domain_image(alg)) << "\n";
        std::cout << "diamond(1p, 0) = "
                  << alg.carrier[mrel::table_diamond(alg, alg.unit_par, alg.zero)]
                  << "\n";
    }
}

int cmd_models_builtin() {
    int exit_code = kExitOk;
    for (const auto& alg : mrel::builtin_models()) {
        std::cout << alg.to_text();
        const auto result = mrel::check_table_axioms(alg, mrel::AlgebraSystem::DpTrioid);
        std::cout << "check " << alg.name << " dp-trioid: "
                  << (result.ok ? "PASS" : "FAIL") << "\n";
        if (!result.ok) exit_code = kExitCheckFailed;
        for (const auto& f : result.failures) {
            std::cout << "  violated " << f.axiom << " at " << f.instance << "\n";
        }
        print_model_summary(alg);
        std::cout << "\n";
    }
    return exit_code;
}

int cmd_models_check(const std::string& path, const std::string& system_name) {
    std::ifstream in(path);
    if (!in) throw mrel::Error("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    const mrel::FiniteAlgebra alg = mrel::FiniteAlgebra::from_text(text);
    const auto system = mrel::parse_system(system_name);
    const auto result = mrel::check_table_axioms(alg, system);
    std::cout << "check " << (alg.name.empty() ? "(unnamed)" : alg.name) << " "
              << system_name << ": " << (result.ok ? "PASS" : "FAIL") << "\n";
    for (const auto& f : result.failures) {
        std::cout << "  violated " << f.axiom << " at " << f.instance << "\n";
    }
    return result.ok ? kExitOk : kExitCheckFailed;
}

int cmd_models_search(const mrel::ModelSearchSpec& spec) {
    const mrel::ModelSearchResult result = mrel::search_models(spec);
    for (const auto& alg : result.models) {
        std::cout << alg.to_text() << "\n";
    }
    std::cout << "search " << mrel::system_name(spec.system) << " size=" << spec.size;
    if (!spec.violate_axiom.empty()) std::cout << " violate=" << spec.violate_axiom;
    if (!spec.require_property.empty()) {
        std::cout << " require=" << spec.require_property;
    }
    std::cout << ": models=" << result.models.size()
              << " candidates=" << result.candidates
              << (result.budget_exhausted ? " (budget exhausted)" : "") << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for multirelations and concurrent dynamic algebra"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a term over an environment");
    std::string eval_env, eval_term;
    eval->add_option("--env", eval_env, "environment file")->required();
    eval->add_option("--term", eval_term, "term to evaluate")->required();

    // laws
    auto* laws = app.add_subcommand("laws", "run the law suite");
    std::optional<std::size_t> laws_size;
    std::string laws_mode, laws_filter, laws_json;
    std::uint64_t laws_seed = 42;
    std::size_t laws_samples = 500;
    laws->add_option("--size", laws_size, "universe size (omit for the default plan)");
    laws->add_option("--mode", laws_mode, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    laws->add_option("--seed", laws_seed, "random seed");
    laws->add_option("--samples", laws_samples, "samples per law in random phases");
    laws->add_option("--filter", laws_filter, "law id prefix");
    laws->add_option("--json", laws_json, "write a JSON report to this path");

    // counterexamples
    auto* counter = app.add_subcommand("counterexamples",
                                       "replay every stored refutation witness");
    std::string counter_json;
    counter->add_option("--json", counter_json, "write a JSON report to this path");

    // star
    auto* star_cmd = app.add_subcommand("star", "least-fixpoint star of a relation");
    std::string star_env, star_rel;
    bool star_do_trace = false;
    star_cmd->add_option("--env", star_env, "environment file")->required();
    star_cmd->add_option("--rel", star_rel, "relation name")->required();
    star_cmd->add_flag("--trace", star_do_trace, "print every iterate");

    // models
    auto* models = app.add_subcommand("models", "finite table models");
    bool models_builtin = false, models_search = false;
    std::string models_check, models_system, models_violate, models_require;
    std::size_t models_size = 3, models_limit = 16;
    std::uint64_t models_budget = 20'000'000;
    models->add_flag("--builtin", models_builtin, "print and verify bundled models");
    models->add_option("--check", models_check, "algebra file to check");
    models->add_option("--system", models_system,
                       "axiom system (proto-dioid, proto-trioid, dp-dioid, dp-trioid, "
                       "ap-dioid, ap-trioid, dp-bi-kleene, ap-bi-kleene)");
    models->add_flag("--search", models_search, "bounded model search");
    models->add_option("--size", models_size, "carrier size for search (2-4)");
    models->add_option("--violate", models_violate, "axiom the model must violate");
    models->add_option("--require", models_require,
                       "property the model must satisfy "
                       "(non-complemented-subidentity, diamond-par-unit-lt)");
    models->add_option("--budget", models_budget, "search budget in candidates");
    models->add_option("--limit", models_limit, "maximum number of models returned");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(eval_env, eval_term);
        if (laws->parsed()) {
            mrel::SuiteConfig config;
            config.seed = laws_seed;
            config.samples = laws_samples;
            config.filter = laws_filter;
            config.size = laws_size;
            if (laws_mode == "exhaustive") config.mode = mrel::SuiteMode::Exhaustive;
            if (laws_mode == "random") config.mode = mrel::SuiteMode::Random;
            return cmd_laws(config, laws_json);
        }
        if (counter->parsed()) return cmd_counterexamples(counter_json);
        if (star_cmd->parsed()) return cmd_star(star_env, star_rel, star_do_trace);
        if (models->parsed()) {
            if (models_builtin) return cmd_models_builtin();
            if (!models_check.empty()) {
                if (models_system.empty()) {
                    throw mrel::Error("--check needs --system");
                }
                return cmd_models_check(models_check, models_system);
            }
            if (models_search) {
                mrel::ModelSearchSpec spec;
                if (models_system.empty()) {
                    throw mrel::Error("--search needs --system");
                }
                spec.system = mrel::parse_system(models_system);
                spec.size = models_size;
                spec.violate_axiom = models_violate;
                spec.require_property = models_require;
                spec.budget = models_budget;
                spec.limit = models_limit;
                return cmd_models_search(spec);
            }
            throw mrel::Error("models needs one of --builtin, --check or --search");
        }
    } catch (const mrel::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
