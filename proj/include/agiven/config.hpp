#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "agiven/domain.hpp"
#include "agiven/optimizer.hpp"

namespace agiven::config {

struct RunControl {
    uint64_t seed = 0;
    bool seed_set = false;
    double warmup_fraction = 0.1;
    uint64_t mana_vehicles = 100000;
    uint64_t foci_events = 1000000;
    bool allow_unstable = false;
};

// Raw sectioned key/value text, preserved so sweeps can override single keys
// and outputs can embed the fully resolved scenario.
using RawConfig = std::map<std::string, std::map<std::string, std::string>>;

struct Scenario {
    MobilityProfile mobility;
    ManaConfig mana;
    FociConfig foci;
    ResourceBudget budget;
    RunControl run;
    optimizer::GridSpec grid;
    RawConfig raw;
};

RawConfig parse_raw(const std::string& text);
RawConfig load_raw(const std::string& path);

// Builds and validates the typed scenario; throws ConfigError with the
// offending section.key on any violation.
Scenario resolve(const RawConfig& raw);
Scenario load(const std::string& path);

// One-line "section.key=value ..." form with every value in canonical units.
std::string describe(const Scenario& scenario);

// Parses a sweep value list: "a,b,c" or "lo:hi:step", unit suffixes allowed.
std::vector<std::string> expand_values(const std::string& spec, const std::string& field);

void override_key(RawConfig& raw, const std::string& dotted_key, const std::string& value);

}  // namespace agiven::config
