#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "socsim/engine/trace.hpp"
#include "socsim/runner/config.hpp"

namespace socsim::runner {

// Written as manifest.json next to the run outputs. A manifest plus the
// toolkit version and seed pins the run: replaying the echoed config
// reproduces every listed file byte for byte.
struct RunManifest {
    std::string toolkit_version;
    std::string rng_algorithm;
    std::string model;
    std::string config_text;
    std::int64_t start_tick = 0;
    std::int64_t end_tick = 0;
    std::vector<std::string> output_files;  // relative to the run directory
    MetricMap final_metrics;

    std::string to_json_text() const;
};

// Output root override for batch jobs; when set, output_dir is resolved
// relative to it.
inline constexpr const char* kOutputRootEnv = "SOCSIM_OUTPUT_ROOT";

std::filesystem::path resolve_output_dir(const RunConfig& config);

// Runs the configured model without touching the filesystem.
Trace run_model(const RunConfig& config);

// Runs the model and writes metrics.csv, one snapshot file per recorded
// tick, and manifest.json into the resolved output directory.
RunManifest run_experiment(const RunConfig& config);

}  // namespace socsim::runner
