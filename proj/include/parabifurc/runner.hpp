#pragma once

#include <string>
#include <vector>

#include "parabifurc/config.hpp"

namespace parabifurc {

struct RunResult {
    int exit_code = 0;  // 0 ok, 2 validation error, 3 numerical failure
    std::vector<std::string> files;
    std::string summary;
};

/// Executes one experiment config, writing report files under out_dir.
/// A failed checker verdict is a result (exit 0), not an error.
RunResult run_experiment(const ExperimentConfig& config, const std::string& out_dir);

}  // namespace parabifurc
