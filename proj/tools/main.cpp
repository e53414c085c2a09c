#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli/app.hpp"

namespace
{

int emit(const quotcoh::cli::RunOutcome &outcome, const std::string &output_path)
{
    if (outcome.exit_code != quotcoh::cli::exit_ok) {
        std::cerr << outcome.error << "\n";
        return outcome.exit_code;
    }
    if (output_path.empty()) {
        std::cout << outcome.output;
        return quotcoh::cli::exit_ok;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << output_path << "'\n";
        return quotcoh::cli::exit_config;
    }
    out << outcome.output;
    return quotcoh::cli::exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    using namespace quotcoh::cli;

    CLI::App app{"Cohomology and Ext groups of tautological bundles on punctual Quot schemes of curves"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string policy;
    std::string output;
    bool timestamps = false;
    const auto add_output_flags = [&](CLI::App *sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table", "latex"}));
        sub->add_option("--output", output, "Write output to this file instead of stdout");
    };

    std::string config_path;
    auto *run = app.add_subcommand("run", "Evaluate the queries of a JSON config");
    run->add_option("config", config_path, "Config file")->required();
    add_output_flags(run);
    run->add_option("--policy", policy, "Override the config's cohomology policy")
        ->check(CLI::IsMember({"strict", "generic"}));
    run->add_flag("--timestamps", timestamps, "Add a generation timestamp to JSON output");

    VerifyOptions verify_options;
    const auto add_verify_flags = [&](CLI::App *sub) {
        sub->add_option("--max-dim", verify_options.max_dim, "Largest total dimension in the oracle sweep");
        sub->add_option("--max-k", verify_options.max_k, "Largest power in the oracle sweep");
    };
    auto *verify = app.add_subcommand("verify", "Oracle equivalence, random identities and the consistency sweep");
    add_verify_flags(verify);
    verify->add_option("--seed", verify_options.seed, "Seed for the random identity checks");

    auto *oracle = app.add_subcommand("oracle", "Enumeration oracle");
    oracle->require_subcommand(1);
    auto *oracle_verify = oracle->add_subcommand("verify", "Oracle equivalence sweep only");
    add_verify_flags(oracle_verify);

    std::int64_t genus = 0;
    std::int64_t rank = 2;
    std::int64_t degree = 0;
    std::int64_t d = 1;
    auto *geometry = app.add_subcommand("geometry", "Dimensions and Betti numbers");
    geometry->require_subcommand(1);
    auto *info = geometry->add_subcommand("info", "Quot_d(E), Flag_d(E) and C^(d)");
    info->add_option("--genus", genus, "Genus of the curve")->check(CLI::NonNegativeNumber);
    info->add_option("--rank", rank, "Rank of E");
    info->add_option("--degree", degree, "Degree of E");
    info->add_option("--d", d, "Length of the quotients")->check(CLI::NonNegativeNumber);
    add_output_flags(info);

    CLI11_PARSE(app, argc, argv);

    try {
        RunOptions options;
        options.format = parse_format(format);
        options.timestamps = timestamps;
        if (!policy.empty()) {
            options.policy = policy == "strict" ? quotcoh::CohMode::strict : quotcoh::CohMode::generic;
        }

        if (run->parsed()) {
            return emit(run_file(config_path, options), output);
        }
        if (geometry->parsed()) {
            return emit(geometry_info(genus, rank, degree, d, options), output);
        }
        if (oracle_verify->parsed()) {
            verify_options.oracle_only = true;
        }
        const auto report = run_verify(verify_options);
        std::cout << format_verify_report(report);
        return report.passed() ? exit_ok : exit_internal;
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_internal;
    }
}
