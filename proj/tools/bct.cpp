// Batch front end: parse a problem file, dispatch to the solvers, verify
// certificates, and emit a pretty or machine-readable report.

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bct/iopart.hpp"
#include "bct/minint.hpp"
#include "bct/serialize.hpp"

namespace {

using bct::json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitUnsolvable = 2;

json certificate_to_json(const bct::Certificate& c) {
    return json{{"implementable", c.implementable},
                {"regularly_implementable", c.regularly_implementable},
                {"regular", c.regular},
                {"equivalent_to_canonical", c.equivalent_to_canonical}};
}

void print_pretty_cert(std::ostream& out, const bct::Certificate& c) {
    out << "certificate:\n"
        << "  implementable:            " << (c.implementable ? "yes" : "no") << "\n"
        << "  regularly implementable:  " << (c.regularly_implementable ? "yes" : "no") << "\n"
        << "  regular:                  " << (c.regular ? "yes" : "no") << "\n"
        << "  equivalent to canonical:  " << (c.equivalent_to_canonical ? "yes" : "no") << "\n";
}

struct Options {
    std::string input, output, format = "pretty";
    int max_degree = 64;
    bool oracle = false;
};

int run_command(const std::string& command, const Options& opt) {
    std::ifstream in(opt.input);
    if (!in) {
        std::cerr << "error: cannot open input file: " << opt.input << "\n";
        return kExitInputError;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    bct::ProblemFile pf;
    try {
        pf = bct::parse_problem(buf.str());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    bct::set_degree_cap(opt.max_degree > 0 ? opt.max_degree : pf.max_degree);
    const bct::ControlProblem& p = pf.problem;

    json report{{"command", command}, {"problem", bct::problem_to_json(pf)}};
    std::ostringstream pretty;
    int exit_code = kExitOk;

    try {
        if (command == "check") {
            const bool impl = bct::is_implementable(p);
            const bool reg = impl && bct::is_regularly_implementable(p);
            report["result"] = json{{"implementable", impl}, {"regularly_implementable", reg}};
            pretty << "implementable:            " << (impl ? "yes" : "no") << "\n"
                   << "regularly implementable:  " << (reg ? "yes" : "no") << "\n";
        } else if (command == "canonical") {
            const bct::Behavior ccan = bct::minimal_rep(bct::canonical_controller(p));
            report["result"] = json{{"canonical_controller", bct::behavior_to_json(ccan)}};
            pretty << "canonical controller (over";
            for (const auto& v : ccan.vars) pretty << " " << v;
            pretty << "):\n" << bct::matrix_pretty(ccan.rep) << "\n";
        } else if (command == "synthesize") {
            const auto c0 = bct::bootstrap_regular_controller(p);
            if (!c0) {
                report["result"] = json{{"status", "not regularly implementable"}};
                pretty << "unsolvable: not regularly implementable\n";
                exit_code = kExitUnsolvable;
            } else {
                const auto cert = bct::make_certificate(p, *c0);
                report["result"] = json{{"status", "ok"},
                                        {"controller", bct::behavior_to_json(*c0)},
                                        {"certificate", certificate_to_json(cert)}};
                pretty << "controller:\n" << bct::matrix_pretty(c0->rep) << "\n";
                print_pretty_cert(pretty, cert);
            }
        } else if (command == "min-interaction") {
            const auto out = bct::minimize_interaction(p);
            if (out.status != bct::SynthStatus::ok) {
                report["result"] = json{{"status", to_string(out.status)}};
                pretty << "unsolvable: " << to_string(out.status) << "\n";
                exit_code = kExitUnsolvable;
            } else {
                const auto& r = *out.result;
                report["result"] = json{{"status", "ok"},
                                        {"controller", bct::behavior_to_json(r.controller)},
                                        {"irrelevant_variables", r.irrelevant},
                                        {"V", bct::matrix_to_json(r.V)},
                                        {"certificate", certificate_to_json(r.certificate)}};
                pretty << "irrelevant variables:";
                for (const auto& v : r.irrelevant) pretty << " " << v;
                pretty << "\nV:\n" << bct::matrix_pretty(r.V) << "\n";
                pretty << "controller:\n" << bct::matrix_pretty(r.controller.rep) << "\n";
                print_pretty_cert(pretty, r.certificate);
                if (opt.oracle) {
                    const auto cm = bct::minimal_rep(*bct::bootstrap_regular_controller(p));
                    const auto pc = bct::minimal_rep(bct::control_manifest(p));
                    const auto oracle = bct::oracle_max_nullifiable(cm.rep, pc.rep);
                    const bool agrees = oracle.count == static_cast<int>(r.irrelevant.size());
                    report["result"]["oracle"] =
                        json{{"count", oracle.count}, {"agrees", agrees}};
                    pretty << "oracle count: " << oracle.count << " ("
                           << (agrees ? "agrees" : "MISMATCH") << ")\n";
                }
            }
        } else if (command == "io-partition") {
            const auto out = bct::solve_io_partition(p);
            if (out.status != bct::SynthStatus::ok) {
                report["result"] = json{{"status", to_string(out.status)}};
                pretty << "unsolvable: " << to_string(out.status) << "\n";
                exit_code = kExitUnsolvable;
            } else {
                const auto& r = *out.result;
                report["result"] = json{{"status", "ok"},
                                        {"controller", bct::behavior_to_json(r.controller)},
                                        {"input_selectable", r.input_selectable},
                                        {"V", bct::matrix_to_json(r.V)},
                                        {"certificate", certificate_to_json(r.certificate)}};
                pretty << "controller:\n" << bct::matrix_pretty(r.controller.rep) << "\n";
                pretty << "input-selectable: " << (r.input_selectable ? "yes" : "no") << "\n";
                print_pretty_cert(pretty, r.certificate);
            }
        } else if (command == "verify") {
            if (!pf.controller) {
                std::cerr << "error: verify needs a \"controller\" matrix in the problem file\n";
                return kExitInputError;
            }
            const bct::Behavior ctrl{*pf.controller, p.c_vars};
            const auto cert = bct::make_certificate(p, ctrl);
            const bool implements =
                bct::equals(bct::controlled_behavior(p, ctrl), p.spec_behavior());
            report["result"] = json{{"certificate", certificate_to_json(cert)},
                                    {"implements_specification", implements}};
            pretty << "implements specification: " << (implements ? "yes" : "no") << "\n";
            if (!p.declared_outputs.empty()) {
                std::vector<int> u_idx, y_idx;
                for (int j = 0; j < static_cast<int>(p.c_vars.size()); ++j) {
                    const auto& name = p.c_vars[static_cast<size_t>(j)];
                    const bool declared =
                        std::find(p.declared_outputs.begin(), p.declared_outputs.end(), name) !=
                        p.declared_outputs.end();
                    (declared ? y_idx : u_idx).push_back(j);
                }
                const auto cm = bct::minimal_rep(ctrl);
                const bool sel = bct::is_input_selectable(
                    {cm.rep.select_cols(u_idx), cm.rep.select_cols(y_idx), {}, {}});
                report["result"]["input_selectable"] = sel;
                pretty << "input-selectable: " << (sel ? "yes" : "no") << "\n";
            }
            print_pretty_cert(pretty, cert);
        }
    } catch (const bct::degree_cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    std::string text = opt.format == "json" ? report.dump(2) + "\n" : pretty.str();
    if (opt.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.output);
        if (!out) {
            std::cerr << "error: cannot open output file: " << opt.output << "\n";
            return kExitInputError;
        }
        out << text;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"behavioral control synthesis over exact polynomial matrices"};
    app.require_subcommand(1);

    Options opt;
    std::vector<CLI::App*> subs;
    for (const char* name : {"check", "canonical", "synthesize", "min-interaction",
                             "io-partition", "verify"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--input", opt.input, "problem file (JSON)")->required();
        sub->add_option("--output", opt.output, "write the report here instead of stdout");
        sub->add_option("--format", opt.format, "json|pretty")
            ->check(CLI::IsMember({"json", "pretty"}));
        sub->add_option("--max-degree", opt.max_degree, "intermediate degree cap");
        if (std::string(name) == "min-interaction")
            sub->add_flag("--oracle", opt.oracle, "also run the brute-force cross-check");
        subs.push_back(sub);
    }

    CLI11_PARSE(app, argc, argv);
    for (auto* sub : subs)
        if (sub->parsed()) return run_command(sub->get_name(), opt);
    return kExitInputError;
}
