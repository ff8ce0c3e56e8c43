// Command-line front end for the canned experiments.
//
// Exit codes: 0 success, 1 bad usage or config, 2 runtime failure,
// 3 built-in checks failed under --check.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gencase/experiments.hpp"

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gencase::ValidationError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw gencase::Error("write to '" + path + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generic-case complexity experiments"};
    app.set_version_flag("--version",
                         std::string(gencase::kToolName) + " " + gencase::kVersion);

    std::string config_path, experiment, out_path, csv_path;
    std::uint64_t seed = 0, trials = 0;
    bool quiet = false, strict = false, list = false;
    app.add_option("--config", config_path, "experiment config file (key = value lines)");
    app.add_option("--experiment", experiment, "experiment name (overrides the config)");
    app.add_option("--seed", seed, "sampling seed (overrides the config)");
    app.add_option("--trials", trials, "samples per point (overrides the config)");
    app.add_option("--out", out_path, "write the full result JSON to this file");
    app.add_option("--csv", csv_path, "write a plot-ready CSV to this file");
    app.add_flag("--quiet", quiet, "suppress the result JSON on stdout");
    app.add_flag("--check", strict, "exit 3 when any built-in check fails");
    app.add_flag("--list", list, "list the experiments and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (list) {
            for (const auto& info : gencase::experiment_catalog())
                std::cout << info.name << "\n    " << info.summary << "\n";
            return 0;
        }

        gencase::ExperimentConfig cfg;
        if (!config_path.empty()) cfg = gencase::parse_config_file(config_path);
        if (app.count("--experiment") > 0) cfg.experiment = experiment;
        if (app.count("--seed") > 0) cfg.seed = seed;
        if (app.count("--trials") > 0) {
            if (trials < 1) throw gencase::ValidationError("--trials must be >= 1");
            cfg.trials = trials;
        }

        const gencase::ExperimentResult res = gencase::run_experiment(cfg);

        if (!csv_path.empty()) write_file(csv_path, gencase::result_csv(res));
        if (!out_path.empty()) write_file(out_path, res.full_json().dump(2) + "\n");
        if (!quiet) std::cout << res.full_json().dump(2) << "\n";
        for (const auto& failure : res.check_failures)
            std::cerr << "check failed: " << failure << "\n";
        if (strict && !res.checks_passed()) return 3;
        return 0;
    } catch (const gencase::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
