// qmagic CLI: reproduces the library's tables and figures as CSV/JSON and
// runs the invariant verification suite.
//
//   qmagic table1 --p 3 --p 5 --p 7
//   qmagic table2 --format json
//   qmagic fig2 --resolution 90 --out fig2.csv
//   qmagic satotate --p 101
//   qmagic entropy_min --p 11 --restarts 200 --seed 0
//   qmagic verify
//
// Exit codes: 0 success, 1 usage, 2 verification failure, 3 numeric failure.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qmagic/cli.hpp"

using qmagic::cli::Artifact;
using qmagic::cli::RunConfig;

int main(int argc, char** argv) {
    CLI::App app{"magic-state nonlocality and uncertainty toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "csv";

    for (const char* name :
         {"table1", "table2", "fig2", "satotate", "entropy_min", "verify"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--p", cfg.ps, "prime dimension(s), repeatable");
        sub->add_option("--seed", cfg.seed, "RNG seed (default 0)");
        sub->add_option("--restarts", cfg.restarts, "optimizer/search restarts");
        sub->add_option("--resolution", cfg.resolution, "grid resolution per axis");
        sub->add_option("--tol", cfg.tol, "tolerance override");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
        sub->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    }

    CLI11_PARSE(app, argc, argv);
    cfg.format = (format == "json") ? RunConfig::Format::json : RunConfig::Format::csv;
    cfg.command = app.get_subcommands().front()->get_name();

    Artifact artifact;
    try {
        if (cfg.command == "table1") artifact = qmagic::cli::cmd_table1(cfg);
        else if (cfg.command == "table2") artifact = qmagic::cli::cmd_table2(cfg);
        else if (cfg.command == "fig2") artifact = qmagic::cli::cmd_fig2(cfg);
        else if (cfg.command == "satotate") artifact = qmagic::cli::cmd_satotate(cfg);
        else if (cfg.command == "entropy_min") artifact = qmagic::cli::cmd_entropy_min(cfg);
        else artifact = qmagic::cli::cmd_verify(cfg);
    } catch (const qmagic::UnsupportedDimension& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return qmagic::cli::kExitUsage;
    } catch (const qmagic::BudgetExceeded& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return qmagic::cli::kExitUsage;
    } catch (const qmagic::TheoremViolation& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return qmagic::cli::kExitVerification;
    } catch (const qmagic::Error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return qmagic::cli::kExitNumeric;
    }

    if (cfg.out.empty()) {
        std::cout << artifact.text;
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) {
            std::cerr << "usage error: cannot open " << cfg.out << " for writing\n";
            return qmagic::cli::kExitUsage;
        }
        f << artifact.text;
    }
    return artifact.exit_code;
}
