#include "socsim/runner/experiment.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "socsim/engine/format.hpp"
#include "socsim/engine/grid_io.hpp"
#include "socsim/version.hpp"

namespace socsim::runner {

namespace {

std::string snapshot_filename(std::int64_t tick) {
    std::string digits = format_int(tick);
    if (digits.size() < 8) digits.insert(0, 8 - digits.size(), '0');
    return "snapshot_" + digits + ".txt";
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file: " + path.string());
    return out;
}

void write_metrics_csv(const std::filesystem::path& path, const Trace& trace,
                       const std::vector<std::string>& columns) {
    std::ofstream out = open_output(path);
    out << "tick";
    for (const std::string& name : columns) out << ',' << name;
    out << '\n';
    for (const TraceEntry& entry : trace.entries()) {
        out << format_int(entry.tick);
        for (const std::string& name : columns) {
            const auto it = entry.metrics.find(name);
            if (it == entry.metrics.end()) {
                throw std::logic_error("metric \"" + name + "\" missing from trace entry");
            }
            out << ',' << format_double(it->second);
        }
        out << '\n';
    }
}

}  // namespace

std::string RunManifest::to_json_text() const {
    nlohmann::json j;
    j["toolkit_version"] = toolkit_version;
    j["rng_algorithm"] = rng_algorithm;
    j["model"] = model;
    j["config"] = config_text;
    j["start_tick"] = start_tick;
    j["end_tick"] = end_tick;
    j["outputs"] = output_files;
    j["final_metrics"] = final_metrics;
    return j.dump(2) + "\n";
}

std::filesystem::path resolve_output_dir(const RunConfig& config) {
    const char* root = std::getenv(kOutputRootEnv);
    if (root != nullptr && *root != '\0') {
        return std::filesystem::path(root) / config.output_dir;
    }
    return std::filesystem::path(config.output_dir);
}

Trace run_model(const RunConfig& config) {
    switch (config.model) {
        case ModelKind::ant:
            return ant::run_ant_model(config.ant, config.seed, config.steps,
                                      config.snapshot_every);
        case ModelKind::schelling:
            return schelling::run_schelling_model(config.schelling, config.seed, config.steps,
                                                  config.snapshot_every);
        case ModelKind::impact:
            return impact::run_impact_model(config.impact, config.seed, config.steps,
                                            config.snapshot_every);
    }
    throw std::logic_error("unreachable model kind");
}

RunManifest run_experiment(const RunConfig& config) {
    const Trace trace = run_model(config);

    const std::filesystem::path dir = resolve_output_dir(config);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory: " + dir.string());

    RunManifest manifest;
    manifest.toolkit_version = kToolkitVersion;
    manifest.rng_algorithm = RngStream::kAlgorithm;
    manifest.model = model_name(config.model);
    manifest.config_text = config.serialize();
    manifest.start_tick = trace.front().tick;
    manifest.end_tick = trace.back().tick;
    manifest.final_metrics = trace.back().metrics;

    manifest.output_files.push_back("metrics.csv");
    write_metrics_csv(dir / "metrics.csv", trace, metric_names(config.model));
    for (const TraceEntry& entry : trace.entries()) {
        const std::string name = snapshot_filename(entry.tick);
        std::ofstream out = open_output(dir / name);
        write_grid(out, entry.snapshot, entry.tick);
        manifest.output_files.push_back(name);
    }

    open_output(dir / "manifest.json") << manifest.to_json_text();
    return manifest;
}

}  // namespace socsim::runner
