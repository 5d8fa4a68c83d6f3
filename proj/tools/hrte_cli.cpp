#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "hrte/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"hrte - pseudospectral Hartree equation lab"};
    app.require_subcommand(1);

    std::string config_path, checkpoint_path;
    std::string output_dir;
    std::uint64_t seed = 0;
    bool seed_set = false, oracle = false;
    double extra_T = 0.0;
    std::string resume_config;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--output-dir", output_dir, "override the output directory");
        cmd->add_option("--seed", seed, "override the run seed")
            ->each([&](const std::string&) { seed_set = true; });
        cmd->add_flag("--oracle", oracle,
                      "force exhaustive Morawetz sums (grids with M^n <= 4096)");
    };

    CLI::App* run = app.add_subcommand("run", "execute a config file");
    run->add_option("config", config_path, "run configuration file")->required();
    add_common(run);

    CLI::App* resume =
        app.add_subcommand("resume", "continue a checkpointed run");
    resume->add_option("checkpoint", checkpoint_path, "checkpoint file")
        ->required();
    resume->add_option("--extra-time", extra_T, "additional time to integrate")
        ->required();
    resume->add_option("--config", resume_config,
                       "config supplying sample cadence and tracked norms");
    add_common(resume);

    CLI::App* validate =
        app.add_subcommand("validate", "parse a config file and exit");
    validate->add_option("config", config_path, "run configuration file")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : hrte::kExitConfig;
    }

    hrte::CliOverrides ov;
    if (!output_dir.empty()) ov.output_dir = output_dir;
    if (seed_set) ov.seed = seed;
    ov.oracle = oracle;

    if (run->parsed()) return hrte::cli_run(config_path, ov);
    if (resume->parsed()) {
        std::optional<std::string> cfg;
        if (!resume_config.empty()) cfg = resume_config;
        return hrte::cli_resume(checkpoint_path, extra_T, cfg, ov);
    }
    if (validate->parsed()) return hrte::cli_validate(config_path);
    return hrte::kExitConfig;
}
