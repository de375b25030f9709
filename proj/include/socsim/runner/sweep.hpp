#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "socsim/runner/config.hpp"

namespace socsim::runner {

struct SweepParam {
    std::string key;                  // config key, e.g. "schelling.vacancy_fraction"
    std::vector<std::string> values;  // raw value strings, validated per grid point
};

struct SweepResult {
    std::filesystem::path summary_path;
    int runs = 0;
    int failures = 0;
};

// Runs every grid point x replicates, replicate r seeded with base seed + r.
// Grid order is the given parameter order (first parameter outermost),
// replicates innermost; each run writes into run_<index>/ under the base
// output directory. Emits one summary row per run; failed runs are recorded
// in their row and the sweep continues.
SweepResult run_sweep(const RunConfig& base, const std::vector<SweepParam>& params,
                      int replicates);

}  // namespace socsim::runner
