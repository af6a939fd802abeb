#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "agiven/cli.hpp"
#include "agiven/config.hpp"
#include "agiven/errors.hpp"

using namespace agiven;

int main(int argc, char** argv) {
    CLI::App app{"Multi-resource slicing toolkit for air-ground vehicular networks"};
    app.require_subcommand(1);

    std::string config_path, out_path, sweep_mode = "analyze";
    std::vector<std::string> sweep_specs;
    uint64_t seed = 0;
    bool seed_given = false, json_mirror = false;
    int workers = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "scenario config file")->required();
        sub->add_option("--out", out_path, "output CSV path")->required();
        sub->add_option("--seed", seed, "random seed (overrides [run] seed)")
            ->each([&](const std::string&) { seed_given = true; });
        sub->add_flag("--json", json_mirror, "also write a JSON mirror next to the CSV");
        sub->add_option("--workers", workers, "sweep worker threads (0 = auto)");
        sub->add_option("--sweep", sweep_specs,
                        "sweep axis as section.key=v1,v2,... or section.key=lo:hi:step");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "closed-form slice metrics");
    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo vs analytic comparison");
    CLI::App* optimize = app.add_subcommand("optimize", "exhaustive slicing schemes");
    CLI::App* sweep = app.add_subcommand("sweep", "cartesian sweep of another mode");
    sweep->add_option("--mode", sweep_mode, "analyze | simulate | optimize");
    for (CLI::App* sub : {analyze, simulate, optimize, sweep}) add_common(sub);

    CLI11_PARSE(app, argc, argv);

    cli::RunSpec spec;
    spec.config_path = config_path;
    spec.output_path = out_path;
    spec.json_mirror = json_mirror;
    spec.workers = workers;
    spec.sweep_mode = sweep_mode;
    if (seed_given) spec.seed = seed;
    if (analyze->parsed()) spec.mode = cli::Mode::kAnalyze;
    if (simulate->parsed()) spec.mode = cli::Mode::kSimulate;
    if (optimize->parsed()) spec.mode = cli::Mode::kOptimize;
    if (sweep->parsed()) spec.mode = cli::Mode::kSweep;

    try {
        for (const auto& s : sweep_specs) {
            size_t eq = s.find('=');
            if (eq == std::string::npos) {
                std::cerr << "config error: --sweep expects key=values, got '" << s << "'\n";
                return cli::kExitConfig;
            }
            std::string key = s.substr(0, eq);
            spec.sweep_axes.emplace_back(key, config::expand_values(s.substr(eq + 1), key));
        }
        // --sweep on a non-sweep subcommand is a shorthand for sweep --mode.
        if (!spec.sweep_axes.empty() && spec.mode != cli::Mode::kSweep) {
            spec.sweep_mode =
                spec.mode == cli::Mode::kAnalyze
                    ? "analyze"
                    : (spec.mode == cli::Mode::kSimulate ? "simulate" : "optimize");
            spec.mode = cli::Mode::kSweep;
        }
        return cli::run(spec, std::cerr);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return cli::kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitConfig;
    }
}
