#include "socsim/runner/sweep.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "socsim/engine/format.hpp"
#include "socsim/runner/experiment.hpp"
#include "socsim/version.hpp"

namespace socsim::runner {

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// Replaces the key's line in canonical config text, or appends one.
std::string apply_override(const std::string& text, const std::string& key,
                           const std::string& value) {
    std::istringstream in(text);
    std::string line;
    std::string out;
    bool replaced = false;
    const std::string prefix = key + " = ";
    while (std::getline(in, line)) {
        if (line.rfind(prefix, 0) == 0) {
            out += prefix + value + '\n';
            replaced = true;
        } else {
            out += line + '\n';
        }
    }
    if (!replaced) out += prefix + value + '\n';
    return out;
}

std::string run_dir_name(int index) {
    std::string digits = format_int(index);
    if (digits.size() < 4) digits.insert(0, 4 - digits.size(), '0');
    return "run_" + digits;
}

}  // namespace

SweepResult run_sweep(const RunConfig& base, const std::vector<SweepParam>& params,
                      int replicates) {
    if (params.empty()) throw ConfigError("empty parameter grid");
    if (replicates < 1) throw ConfigError("replicates must be at least 1");
    for (const SweepParam& p : params) {
        if (p.values.empty()) throw ConfigError("empty value list for \"" + p.key + "\"");
        if (p.key == "model" || p.key == "output_dir") {
            throw ConfigError("cannot sweep key \"" + p.key + "\"");
        }
    }

    const std::filesystem::path base_dir = resolve_output_dir(base);
    std::error_code ec;
    std::filesystem::create_directories(base_dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory: " + base_dir.string());

    const std::vector<std::string> metrics = metric_names(base.model);
    std::ostringstream summary;
    for (const SweepParam& p : params) summary << csv_escape(p.key) << ',';
    summary << "seed,status,error";
    for (const std::string& m : metrics) summary << ',' << m;
    summary << '\n';

    nlohmann::json run_log = nlohmann::json::array();
    const std::string base_text = base.serialize();
    std::vector<std::size_t> odometer(params.size(), 0);
    SweepResult result;

    for (bool more = true; more;) {
        std::string text = base_text;
        for (std::size_t i = 0; i < params.size(); ++i) {
            text = apply_override(text, params[i].key, params[i].values[odometer[i]]);
        }

        RunConfig point;
        std::string point_error;
        bool point_ok = true;
        try {
            point = parse_config(text);
        } catch (const std::exception& e) {
            point_ok = false;
            point_error = e.what();
        }

        for (int r = 0; r < replicates; ++r) {
            const int index = result.runs++;
            const std::string dir = run_dir_name(index);
            const std::uint64_t seed = (point_ok ? point.seed : base.seed) + r;

            std::string status = "ok";
            std::string error;
            MetricMap final_metrics;
            if (!point_ok) {
                status = "error";
                error = point_error;
            } else {
                RunConfig run_cfg = point;
                run_cfg.seed = seed;
                run_cfg.output_dir = base.output_dir + "/" + dir;
                try {
                    final_metrics = run_experiment(run_cfg).final_metrics;
                } catch (const std::exception& e) {
                    status = "error";
                    error = e.what();
                }
            }
            if (status != "ok") ++result.failures;

            for (std::size_t i = 0; i < params.size(); ++i) {
                summary << csv_escape(params[i].values[odometer[i]]) << ',';
            }
            summary << format_uint(seed) << ',' << status << ',' << csv_escape(error);
            for (const std::string& m : metrics) {
                summary << ',';
                const auto it = final_metrics.find(m);
                if (it != final_metrics.end()) summary << format_double(it->second);
            }
            summary << '\n';
            run_log.push_back({{"dir", dir}, {"seed", seed}, {"status", status}});
        }

        // Advance the grid odometer, last parameter fastest.
        more = false;
        for (std::size_t i = params.size(); i-- > 0;) {
            if (++odometer[i] < params[i].values.size()) {
                more = true;
                break;
            }
            odometer[i] = 0;
        }
    }

    result.summary_path = base_dir / "summary.csv";
    {
        std::ofstream out(result.summary_path, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot write output file: " +
                                     result.summary_path.string());
        }
        out << summary.str();
    }
    {
        nlohmann::json j;
        j["toolkit_version"] = kToolkitVersion;
        j["rng_algorithm"] = RngStream::kAlgorithm;
        j["base_config"] = base_text;
        nlohmann::json grid = nlohmann::json::array();
        for (const SweepParam& p : params) grid.push_back({{"key", p.key}, {"values", p.values}});
        j["params"] = grid;
        j["replicates"] = replicates;
        j["runs"] = run_log;
        j["outputs"] = {"summary.csv"};
        std::ofstream out(base_dir / "sweep_manifest.json", std::ios::binary);
        if (!out) throw std::runtime_error("cannot write sweep manifest");
        out << j.dump(2) << '\n';
    }
    return result;
}

}  // namespace socsim::runner
