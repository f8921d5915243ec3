#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "biamalg/dsl.hpp"
#include "biamalg/harness.hpp"

using namespace biamalg;

namespace {

void apply_env_order_cap() {
    if (const char* cap = std::getenv("BIAMALG_MAX_ORDER")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(cap, &end, 10);
        if (end && *end == '\0' && v >= 1) {
            ring_config().max_order = static_cast<code_t>(v);
            ring_config().table_cap = std::min<code_t>(ring_config().table_cap,
                                                       static_cast<code_t>(v));
        } else {
            std::cerr << "warning: ignoring malformed BIAMALG_MAX_ORDER\n";
        }
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int emit_execution(const dsl::ExecutionReport& rep, const std::string& json_path) {
    for (const auto& line : rep.output_lines) std::cout << line << "\n";
    if (rep.exit_code == 2) std::cerr << "error: " << rep.error << "\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << rep.to_json() << "\n";
    }
    return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    apply_env_order_cap();

    CLI::App app{"finite commutative ring workbench for bi-amalgamated algebras"};
    app.require_subcommand(1);

    // run
    std::string run_script, run_json;
    auto* run = app.add_subcommand("run", "parse and execute a script");
    run->add_option("script", run_script, "script file")->required();
    run->add_option("--json", run_json, "write a JSON report to this path");

    // check
    std::string check_rexpr, check_prop;
    auto* check = app.add_subcommand("check", "one-shot property check on a ring expression");
    check->add_option("--ring", check_rexpr, "ring expression, e.g. \"Z/8\" or \"Z/2[x]/(x^2)\"")
        ->required();
    check->add_option("--property", check_prop, "gaussian | prufer | local | spec")->required();

    // harness
    CatalogCaps caps;
    std::string harness_json;
    std::vector<std::string> ablate_args, select_args;
    unsigned jobs = 0;
    auto* harness = app.add_subcommand("harness", "run the verification suite over the catalog");
    harness->add_option("--max-ring", caps.max_base_order, "catalog ring order cap");
    harness->add_option("--max-instance", caps.max_instance_order, "|R| cap for instances");
    harness->add_option("--seed", caps.seed, "seed for the randomized hom extension");
    harness->add_option("--random-homs", caps.random_hom_trials,
                        "random generator-image trials per ring pair");
    harness->add_option("--json", harness_json, "write the suite report to this path");
    harness->add_option("--ablate", ablate_args,
                        "drop a hypothesis clause, as theorem:clause (repeatable)");
    harness->add_option("--select", select_args, "restrict to these theorem ids (repeatable)");
    harness->add_option("--jobs", jobs, "worker threads (0 = auto)");

    // export-spec
    std::string export_script, export_dot;
    auto* exporter = app.add_subcommand(
        "export-spec", "run a script and export the last declared spectrum as DOT");
    exporter->add_option("script", export_script, "script file")->required();
    exporter->add_option("--dot", export_dot, "output path")->required();

    // names
    std::string names_rexpr;
    auto* names = app.add_subcommand("names", "print the element code table of a ring");
    names->add_option("--ring", names_rexpr, "ring expression")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            dsl::ExecutionReport rep = dsl::run_source(read_file(run_script));
            return emit_execution(rep, run_json);
        }

        if (*check) {
            std::string source = "ring X = " + check_rexpr + ";\ncheck X " + check_prop + ";\n";
            dsl::ExecutionReport rep = dsl::run_source(source);
            return emit_execution(rep, "");
        }

        if (*harness) {
            std::map<std::string, std::set<std::string>> ablations;
            for (const auto& arg : ablate_args) {
                auto colon = arg.find(':');
                if (colon == std::string::npos) {
                    std::cerr << "error: --ablate expects theorem:clause\n";
                    return 2;
                }
                ablations[arg.substr(0, colon)].insert(arg.substr(colon + 1));
            }
            Catalog cat = generate_catalog(caps);
            std::cout << "catalog: " << cat.rings.size() << " rings, " << cat.homs.size()
                      << " homs, " << cat.instances.size() << " instances\n";
            SuiteReport rep = run_suite(cat, select_args, ablations, jobs);
            for (const auto& r : rep.results) {
                std::cout << r.theorem << ": " << r.failures.size() << " counterexamples over "
                          << r.instances << " runs (" << r.applicable << " applicable)\n";
                for (const auto& f : r.failures) std::cout << "  witness: " << f.witness << "\n";
            }
            std::cout << "total: " << rep.total_failures() << " counterexamples in "
                      << rep.total_seconds << "s\n";

            for (const auto& [thm, clauses] : ablations) {
                SearchResult sr = counterexample_search(cat, thm, clauses);
                if (sr.found) {
                    std::cout << "smallest violator of ablated " << thm << ": |R| = "
                              << sr.r_order << "\n" << sr.replay;
                } else {
                    std::cout << "ablated " << thm << ": exhausted " << sr.searched
                              << " candidates without a violation\n";
                }
            }

            if (!harness_json.empty()) {
                std::ofstream out(harness_json);
                out << rep.to_json() << "\n";
            }
            return rep.total_failures() == 0 ? 0 : 1;
        }

        if (*exporter) {
            std::string source = read_file(export_script);
            dsl::Script sc = dsl::parse_dsl(source);
            std::string target;
            for (const auto& s : sc.stmts)
                if (s.kind == dsl::Stmt::Kind::Ring || s.kind == dsl::Stmt::Kind::Bia)
                    target = s.name;
            if (target.empty()) {
                std::cerr << "error: the script declares no ring or biamalg\n";
                return 2;
            }
            dsl::Stmt exp;
            exp.kind = dsl::Stmt::Kind::Export;
            exp.name = target;
            exp.path = export_dot;
            sc.stmts.push_back(std::move(exp));
            dsl::ExecutionReport rep = dsl::execute_script(sc);
            if (rep.exit_code == 2) std::cerr << "error: " << rep.error << "\n";
            else std::cout << "wrote " << export_dot << "\n";
            return rep.exit_code;
        }

        if (*names) {
            std::string source = "ring X = " + names_rexpr + ";\n";
            dsl::Script sc = dsl::parse_dsl(source);
            RingPtr R = dsl::eval_standalone_ring(*sc.stmts[0].rexpr);
            std::cout << R->name() << " (order " << R->order() << ")\n";
            for (code_t x = 0; x < R->order(); ++x)
                std::cout << x << "\t" << R->element_str(x) << "\n";
            return 0;
        }
    } catch (const dsl::ParseError& e) {
        std::cerr << "error: line " << e.position.line << ":" << e.position.col << ": "
                  << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
