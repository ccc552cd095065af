#include <iostream>
#include <map>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "memesim/app/commands.hpp"

int main(int argc, char** argv) {
    using namespace memesim::app;

    CLI::App app{"memesim: agent-based SIS simulator of meme sharing, with fitting and log analytics"};
    app.require_subcommand(1);

    SimulateOptions sim_opts;
    std::uint64_t seed = 0;
    std::string reference_log;
    auto* simulate = app.add_subcommand("simulate", "Run one simulation and write its artifacts");
    simulate->add_option("--config", sim_opts.config_path, "Run configuration (JSON)")->required();
    auto* seed_opt = simulate->add_option("--seed", seed, "Override the master seed");
    simulate->add_option("--out", sim_opts.out_dir, "Output directory (defaults to output_dir in the config)");
    simulate->add_option("--reference-log", reference_log, "Access log drawn as a comparison panel");
    simulate->add_option("--reference-bin", sim_opts.reference_bin, "Bin width for the reference log")
        ->check(CLI::PositiveNumber);

    std::filesystem::path sweep_config;
    std::filesystem::path sweep_out;
    unsigned threads = 0;
    auto* sweep = app.add_subcommand("sweep", "Run the parameter sweep defined in the config");
    sweep->add_option("--config", sweep_config, "Run configuration with a sweep section")->required();
    sweep->add_option("--out", sweep_out, "Output directory (defaults to output_dir in the config)");
    sweep->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

    std::filesystem::path fit_data;
    std::filesystem::path fit_out;
    FitModel fit_model = FitModel::ols;
    const std::map<std::string, FitModel> models{{"ols", FitModel::ols}, {"logistic", FitModel::logistic}};
    auto* fit = app.add_subcommand("fit", "Fit an OLS or logistic model to a CSV table");
    fit->add_option("--data", fit_data, "CSV with a header row; column 'y' is the response")->required();
    fit->add_option("--model", fit_model, "ols or logistic")
        ->required()
        ->transform(CLI::CheckedTransformer(models, CLI::ignore_case));
    fit->add_option("--out", fit_out, "Output JSON path")->required();

    std::filesystem::path log_path;
    std::filesystem::path analyze_out;
    std::uint64_t bin = 1;
    auto* analyze = app.add_subcommand("analyze", "Summarize per-meme hits in an access log");
    analyze->add_option("--log", log_path, "Log file")->required();
    analyze->add_option("--bin", bin, "Bin width in ticks")->required()->check(CLI::PositiveNumber);
    analyze->add_option("--out", analyze_out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        // Usage errors share the config exit code; the contract has no other slot.
        std::cerr << "error: usage: " << e.what() << '\n';
        return memesim::app::kExitConfig;
    }

    if (simulate->parsed()) {
        if (*seed_opt) sim_opts.seed = seed;
        if (!reference_log.empty()) sim_opts.reference_log = reference_log;
        return cmd_simulate(sim_opts, std::cerr);
    }
    if (sweep->parsed()) {
        return cmd_sweep(sweep_config, sweep_out, std::cerr, threads);
    }
    if (fit->parsed()) {
        return cmd_fit(fit_data, fit_model, fit_out, std::cerr);
    }
    return cmd_analyze(log_path, bin, analyze_out, std::cerr);
}
