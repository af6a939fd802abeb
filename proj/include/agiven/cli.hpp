#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agiven/config.hpp"
#include "agiven/io.hpp"

namespace agiven::cli {

enum class Mode { kAnalyze, kSimulate, kOptimize, kSweep };

struct RunSpec {
    Mode mode = Mode::kAnalyze;
    std::string config_path;
    std::string output_path;
    std::optional<uint64_t> seed;  // overrides [run] seed
    // Sweep axes as (section.key, value list); cartesian product, outer first.
    std::vector<std::pair<std::string, std::vector<std::string>>> sweep_axes;
    std::string sweep_mode = "analyze";  // analyze | simulate | optimize
    bool json_mirror = false;
    int workers = 0;  // 0 = hardware concurrency
};

// Exit codes: 0 ok, 1 config error, 2 infeasible/unstable model, 3 I/O error.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitModel = 2;
constexpr int kExitIo = 3;

// Runs the spec, writes CSV (and JSON when asked); exceptions already mapped
// to exit codes. Error text goes to the provided stream.
int run(const RunSpec& spec, std::ostream& err);

// Row builders shared with the tests and acceptance suite.
std::vector<io::Row> analyze_rows(const config::Scenario& sc);
std::vector<io::Row> simulate_rows(const config::Scenario& sc, uint64_t seed);
std::vector<io::Row> optimize_rows(const config::Scenario& sc);

}  // namespace agiven::cli
