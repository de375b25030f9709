#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "socsim/ant/model.hpp"
#include "socsim/impact/model.hpp"
#include "socsim/schelling/model.hpp"

namespace socsim::runner {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ModelKind { ant, schelling, impact };

const char* model_name(ModelKind model);

// Metric column names a model emits, in CSV column order.
std::vector<std::string> metric_names(ModelKind model);

// A fully resolved run description. Only the active model's section is
// meaningful; the others stay at their defaults.
struct RunConfig {
    ModelKind model = ModelKind::schelling;
    std::uint64_t seed = 0;
    std::int64_t steps = 500;  // ticks (ant) or sweeps (schelling, impact)
    std::int64_t snapshot_every = 500;
    std::string output_dir = "out";
    ant::AntParams ant;
    schelling::SchellingParams schelling;
    impact::ImpactParams impact;

    // Canonical text form; parse_config(serialize()) reproduces this config.
    std::string serialize() const;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Strict parser for the line-oriented `section.key = value` format. Unknown
// keys, duplicates, type mismatches and out-of-range values are rejected
// with the offending key named; omitted optional keys take the documented
// defaults. Lines whose first non-blank character is '#' are comments.
RunConfig parse_config(const std::string& text);

RunConfig load_config(const std::filesystem::path& path);

}  // namespace socsim::runner
