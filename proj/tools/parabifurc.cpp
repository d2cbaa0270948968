#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "parabifurc/errors.hpp"
#include "parabifurc/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"parabifurc: non-autonomous parabolic bifurcation experiments"};
    std::string command, config_path, out_dir = ".", precision;
    std::uint64_t seed = 0;
    bool seed_set = false;
    app.add_option("command", command, "compose|check|rate|counterexample|identities|planar")
        ->required();
    app.add_option("--config", config_path, "experiment config file")->required();
    app.add_option("--out", out_dir, "output directory (default: .)");
    app.add_option("--precision", precision, "std|ext (overrides config)");
    app.add_option("--seed", seed, "seed override")->each([&](const std::string&) {
        seed_set = true;
    });
    CLI11_PARSE(app, argc, argv);

    parabifurc::ExperimentConfig cfg;
    try {
        cfg = parabifurc::parse_config_file(config_path);
    } catch (const parabifurc::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    cfg.command = command;
    if (!precision.empty()) {
        if (precision == "std") cfg.precision = parabifurc::Precision::Standard;
        else if (precision == "ext") cfg.precision = parabifurc::Precision::Extended;
        else {
            std::cerr << "invalid --precision (want std|ext)\n";
            return 2;
        }
    }
    if (seed_set) {
        cfg.seed = seed;
        cfg.params.seed = seed;
    }

    const auto result = parabifurc::run_experiment(cfg, out_dir);
    std::cout << result.summary << "\n";
    for (const auto& f : result.files) std::cout << "wrote " << f << "\n";
    return result.exit_code;
}
