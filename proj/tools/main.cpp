// socsim — batch experiment front door for the simulation toolkit.
//
//   socsim run <config>
//   socsim sweep <config> --param <section.key>=<v1,v2,...> [--replicates N]
//   socsim validate <config>
//
// Exit codes: 0 success, 1 config error, 2 runtime error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "socsim/runner/config.hpp"
#include "socsim/runner/experiment.hpp"
#include "socsim/runner/sweep.hpp"
#include "socsim/version.hpp"

namespace {

std::vector<socsim::runner::SweepParam> parse_params(const std::vector<std::string>& raw) {
    std::vector<socsim::runner::SweepParam> out;
    for (const std::string& spec : raw) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw socsim::runner::ConfigError("--param expects <section.key>=<v1,v2,...>, got \"" +
                                              spec + "\"");
        }
        socsim::runner::SweepParam p;
        p.key = spec.substr(0, eq);
        std::string rest = spec.substr(eq + 1);
        std::size_t start = 0;
        while (true) {
            const auto comma = rest.find(',', start);
            p.values.push_back(rest.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        for (const std::string& v : p.values) {
            if (v.empty()) {
                throw socsim::runner::ConfigError("empty value in --param \"" + spec + "\"");
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic agent-based simulation toolkit"};
    app.set_version_flag("--version", std::string("socsim ") + socsim::kToolkitVersion);
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> raw_params;
    int replicates = 1;

    CLI::App* run = app.add_subcommand("run", "run a single experiment");
    run->add_option("config", config_path, "config file")->required();

    CLI::App* sweep = app.add_subcommand("sweep", "run a parameter grid with replicates");
    sweep->add_option("config", config_path, "base config file")->required();
    sweep->add_option("--param", raw_params, "grid dimension, <section.key>=<v1,v2,...>");
    sweep->add_option("--replicates", replicates, "replicate runs per grid point");

    CLI::App* validate = app.add_subcommand("validate", "parse a config and echo the defaults");
    validate->add_option("config", config_path, "config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        const socsim::runner::RunConfig cfg = socsim::runner::load_config(config_path);
        if (run->parsed()) {
            const auto manifest = socsim::runner::run_experiment(cfg);
            std::cout << "wrote " << manifest.output_files.size() << " files to "
                      << socsim::runner::resolve_output_dir(cfg).string() << '\n';
        } else if (sweep->parsed()) {
            const auto result =
                socsim::runner::run_sweep(cfg, parse_params(raw_params), replicates);
            std::cout << result.runs << " runs (" << result.failures << " failed), summary at "
                      << result.summary_path.string() << '\n';
            if (result.failures > 0) return 2;
        } else {
            std::cout << cfg.serialize();
            std::cout << "config OK\n";
        }
    } catch (const socsim::runner::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
