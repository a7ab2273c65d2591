#include <iostream>

#include <CLI11.hpp>

#include "wigloc/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Phase-space ball-localization toolkit"};
    app.require_subcommand(0, 0);

    wigloc::RunConfig cfg;
    app.add_option("command", cfg.command,
                   "curve | energy | verify-lemma1 | verify-lemma2 | verify-theorem1 | "
                   "nonmonotone | rotation-chain | oracle-check")
        ->required();
    app.add_option("--n", cfg.n, "number of modes");
    app.add_option("--lambda-max", cfg.lambda_max, "largest total excitation");
    app.add_option("--r-min", cfg.r_min, "smallest radius");
    app.add_option("--r-max", cfg.r_max, "largest radius");
    app.add_option("--r-steps", cfg.r_steps, "grid points, endpoints included");
    app.add_option("--out", cfg.output_path, "write rows here instead of stdout");
    app.add_option("--state", cfg.state_path, "state file for the energy command");
    app.add_option("--seed", cfg.seed, "seed for randomized commands");
    app.add_option("--format", cfg.format, "csv or text");
    app.add_option("--trials", cfg.trials, "trial count for randomized commands");
    app.add_option("--mc-samples", cfg.mc_samples, "Monte Carlo sample budget");
    app.add_option("--angular-nodes", cfg.angular_nodes, "trapezoid nodes per mode");
    app.add_option("--radial-nodes", cfg.radial_nodes, "Gauss nodes per simplex level");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : wigloc::kExitUsage;
    }
    return wigloc::run(cfg, std::cout, std::cerr);
}
