#pragma once

#include <complex>
#include <string>
#include <vector>

#include "parabifurc/experiments.hpp"

namespace parabifurc {

/// One experiment, loadable from a flat key=value file with sectioned groups.
/// Round-trips losslessly through serialize()/parse_config_text().
struct ExperimentConfig {
    std::string command;  // compose | check | rate | counterexample | identities | planar
    Family family = Family::Constant;
    FamilyParams params;
    std::vector<long> Ns;
    std::vector<long> n_values;  // planar schedule
    GridSpec grid;
    Precision precision = Precision::Standard;
    std::optional<std::uint64_t> seed;  // also feeds Theorem7Band
    double A_threshold = 0.0;           // 0 = use default_a_threshold()
    std::string map = "H";              // planar: H | L
    std::complex<double> z0{0.1, 0.0};
    std::complex<double> w0{0.05, 0.0};
    int multiplier = 1;
    std::string out_format = "csv";  // csv | structured
    std::string out_stem;            // file name stem; empty = command name

    bool operator==(const ExperimentConfig&) const = default;
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);
std::string serialize(const ExperimentConfig& config);

/// Empty iff the config is runnable; each violation names field and constraint.
std::vector<std::string> validate(const ExperimentConfig& config);

}  // namespace parabifurc
