#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "perfcode/cli.hpp"
#include "perfcode/error.hpp"

int main(int argc, char** argv) {
    CLI::App app{"perfcode: binary perfect codes, product constructions, invariants and propelinearity"};
    app.require_subcommand(1);

    perfcode::CliOptions cli;
    app.add_flag("--json", cli.json, "machine-readable JSON output");
    app.add_option("--threads", cli.base.threads, "worker count for sweeps")->capture_default_str();
    app.add_option("--seed", cli.base.seed, "seed for sampled protocols")->capture_default_str();
    app.add_option("--enum-cap", cli.base.enum_cap_log2, "log2 materialization threshold")->capture_default_str();
    app.add_option("--sample-budget", cli.base.sample_budget, "samples for sampled protocols")->capture_default_str();
    app.add_option("--time-limit", cli.base.time_limit_sec, "seconds for exhaustive searches")->capture_default_str();

    std::string descriptor;
    std::string out_path;
    bool with_groups = true;
    bool budget_low = false;

    CLI::App* construct = app.add_subcommand("construct", "build a code and write it (or its oracle manifest)");
    construct->add_option("descriptor", descriptor, "hamming:<r> | p1 | file:<path> | builtin:4918 | mollard(a,b)")
        ->required();
    construct->add_option("-o,--output", out_path, "output file (stdout when omitted)");

    CLI::App* invariants = app.add_subcommand("invariants", "rank, kernel, zero set, mu, triple counts");
    invariants->add_option("descriptor", descriptor, "code descriptor")->required();
    invariants->add_flag("!--no-groups", with_groups, "skip group orders");

    CLI::App* propelinear = app.add_subcommand("propelinear", "decide propelinearity / emit certificates");
    propelinear->add_option("descriptor", descriptor, "code descriptor")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_flag("--budget-low", budget_low, "skip long group searches");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : perfcode::exit_code::usage;
    }

    // Materializing far past the default threshold exhausts memory long
    // before it is useful; the library stays unrestricted, the tool caps.
    if (cli.base.enum_cap_log2 > 22) {
        std::cerr << "error: --enum-cap above 22 is not supported by the tool\n";
        return perfcode::exit_code::usage;
    }

    try {
        if (construct->parsed())
            return perfcode::cmd_construct(descriptor, out_path, cli, std::cout, std::cerr);
        if (invariants->parsed())
            return perfcode::cmd_invariants(descriptor, cli, with_groups, std::cout, std::cerr);
        if (propelinear->parsed())
            return perfcode::cmd_propelinear(descriptor, cli, std::cout, std::cerr);
        if (verify->parsed()) return perfcode::cmd_verify(cli, budget_low, std::cout, std::cerr);
    } catch (const perfcode::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return perfcode::exit_code::usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return perfcode::exit_code::usage;
    }
    return perfcode::exit_code::usage;
}
