#include "agiven/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "agiven/errors.hpp"
#include "agiven/foci.hpp"
#include "agiven/units.hpp"

namespace agiven::config {

namespace {

using units::format_double;

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

const std::set<std::string> kSections = {"mobility", "mana", "foci", "budget", "run", "grid"};

const std::map<std::string, std::set<std::string>> kKeys = {
    {"mobility",
     {"vehicle_arrival_rate", "erlang_shape", "erlang_rate", "route", "continue_prob",
      "route_probs"}},
    {"mana", {"map_size", "cache_slots", "hap_rate", "rsu_rate", "delay_target"}},
    {"foci",
     {"file_size", "cache_slots", "hap_rate", "rsu_rate", "expire_rate", "request_rate",
      "file_count", "zipf_skew", "popularity", "delay_target"}},
    {"budget", {"rsu_total", "hap_total", "vehicle_cache", "block_count"}},
    {"run", {"seed", "warmup_fraction", "mana_vehicles", "foci_events", "allow_unstable"}},
    {"grid", {"c_m", "r_hm", "c_p", "r_hp"}},
};

class Section {
public:
    Section(const RawConfig& raw, std::string name) : name_(std::move(name)) {
        auto it = raw.find(name_);
        if (it != raw.end()) entries_ = &it->second;
    }

    bool has(const std::string& key) const {
        return entries_ && entries_->count(key) > 0;
    }
    std::string get(const std::string& key) const {
        if (!has(key)) throw ConfigError(name_ + "." + key + ": missing required key");
        return entries_->at(key);
    }
    std::string get_or(const std::string& key, const std::string& fallback) const {
        return has(key) ? entries_->at(key) : fallback;
    }
    std::string qualified(const std::string& key) const { return name_ + "." + key; }

private:
    std::string name_;
    const std::map<std::string, std::string>* entries_ = nullptr;
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
}

std::vector<double> parse_rate_values(const std::string& spec, const std::string& field) {
    std::vector<double> out;
    for (const auto& v : expand_values(spec, field)) out.push_back(units::parse_rate(v, field));
    return out;
}

std::vector<int> parse_int_values(const std::string& spec, const std::string& field) {
    std::vector<int> out;
    for (const auto& v : expand_values(spec, field))
        out.push_back(static_cast<int>(units::parse_integer(v, field)));
    return out;
}

}  // namespace

RawConfig parse_raw(const std::string& text) {
    RawConfig raw;
    std::string section;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ConfigError("config line " + std::to_string(lineno) + ": malformed section");
            section = trim(t.substr(1, t.size() - 2));
            if (!kSections.count(section))
                throw ConfigError("config line " + std::to_string(lineno) + ": unknown section [" +
                                  section + "]");
            raw[section];
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        if (section.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": key outside a section");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        // Strip a trailing comment.
        size_t hash = value.find(" #");
        if (hash != std::string::npos) value = trim(value.substr(0, hash));
        if (!kKeys.at(section).count(key))
            throw ConfigError("config line " + std::to_string(lineno) + ": unknown key " + section +
                              "." + key);
        raw[section][key] = value;
    }
    return raw;
}

RawConfig load_raw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_raw(buf.str());
}

std::vector<std::string> expand_values(const std::string& spec, const std::string& field) {
    std::string t = trim(spec);
    if (t.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::string item;
        std::stringstream ss(t);
        while (std::getline(ss, item, ':')) parts.push_back(trim(item));
        if (parts.size() != 3)
            throw ConfigError(field + ": range must be lo:hi:step, got '" + spec + "'");
        // Units from the parts themselves; use plain numeric compare in a
        // shared scale by parsing each as a plain number if no suffix works.
        auto magnitude = [&](const std::string& s) {
            try {
                return units::parse_rate(s, field);
            } catch (const ConfigError&) {
            }
            try {
                return units::parse_bits(s, field);
            } catch (const ConfigError&) {
            }
            return units::parse_number(s, field);
        };
        double lo = magnitude(parts[0]);
        double hi = magnitude(parts[1]);
        double step = magnitude(parts[2]);
        if (!(step > 0.0)) throw ConfigError(field + ": range step must be positive");
        if (hi < lo) throw ConfigError(field + ": range hi must be >= lo");
        std::vector<std::string> out;
        int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
        for (int i = 0; i <= n; ++i) out.push_back(format_double(lo + i * step));
        return out;
    }
    auto items = split_list(t);
    if (items.empty()) throw ConfigError(field + ": empty value list");
    return items;
}

void override_key(RawConfig& raw, const std::string& dotted_key, const std::string& value) {
    size_t dot = dotted_key.find('.');
    if (dot == std::string::npos)
        throw ConfigError("sweep key must be section.key, got '" + dotted_key + "'");
    std::string section = dotted_key.substr(0, dot);
    std::string key = dotted_key.substr(dot + 1);
    if (!kSections.count(section))
        throw ConfigError("sweep key: unknown section '" + section + "'");
    if (!kKeys.at(section).count(key))
        throw ConfigError("sweep key: unknown key '" + dotted_key + "'");
    raw[section][key] = value;
}

Scenario resolve(const RawConfig& raw) {
    Scenario sc;
    sc.raw = raw;

    Section mob(raw, "mobility");
    sc.mobility.vehicle_arrival_rate =
        units::parse_number(mob.get("vehicle_arrival_rate"), mob.qualified("vehicle_arrival_rate"));
    sc.mobility.erlang_shape = static_cast<int>(
        units::parse_integer(mob.get("erlang_shape"), mob.qualified("erlang_shape")));
    sc.mobility.erlang_rate =
        units::parse_number(mob.get("erlang_rate"), mob.qualified("erlang_rate"));
    std::string route_kind = mob.get_or("route", "geometric");
    if (route_kind == "geometric") {
        double psi =
            units::parse_number(mob.get("continue_prob"), mob.qualified("continue_prob"));
        sc.mobility.route_dist = make_geometric_route(GeometricRoute{psi});
    } else if (route_kind == "explicit") {
        std::vector<double> probs;
        for (const auto& v : split_list(mob.get("route_probs")))
            probs.push_back(units::parse_number(v, mob.qualified("route_probs")));
        sc.mobility.route_dist = make_explicit_route(std::move(probs));
    } else {
        throw ConfigError("mobility.route: must be 'geometric' or 'explicit'");
    }
    validate(sc.mobility);

    Section mana_s(raw, "mana");
    sc.mana.map_size = units::parse_bits(mana_s.get("map_size"), mana_s.qualified("map_size"));
    sc.mana.cache_slots = static_cast<int>(
        units::parse_integer(mana_s.get("cache_slots"), mana_s.qualified("cache_slots")));
    sc.mana.hap_rate = units::parse_rate(mana_s.get("hap_rate"), mana_s.qualified("hap_rate"));
    sc.mana.rsu_rate = units::parse_rate(mana_s.get("rsu_rate"), mana_s.qualified("rsu_rate"));
    sc.mana.delay_target =
        units::parse_seconds(mana_s.get("delay_target"), mana_s.qualified("delay_target"));
    validate(sc.mana);

    Section foci_s(raw, "foci");
    sc.foci.file_size = units::parse_bits(foci_s.get("file_size"), foci_s.qualified("file_size"));
    sc.foci.cache_slots = static_cast<int>(
        units::parse_integer(foci_s.get("cache_slots"), foci_s.qualified("cache_slots")));
    sc.foci.hap_rate = units::parse_rate(foci_s.get("hap_rate"), foci_s.qualified("hap_rate"));
    sc.foci.rsu_rate = units::parse_rate(foci_s.get("rsu_rate"), foci_s.qualified("rsu_rate"));
    sc.foci.expire_rate =
        units::parse_number(foci_s.get("expire_rate"), foci_s.qualified("expire_rate"));
    sc.foci.request_rate =
        units::parse_number(foci_s.get("request_rate"), foci_s.qualified("request_rate"));
    sc.foci.delay_target =
        units::parse_seconds(foci_s.get("delay_target"), foci_s.qualified("delay_target"));
    if (foci_s.has("popularity")) {
        std::vector<double> probs;
        for (const auto& v : split_list(foci_s.get("popularity")))
            probs.push_back(units::parse_number(v, foci_s.qualified("popularity")));
        sc.foci.popularity = Popularity{std::move(probs)};
    } else {
        int file_count = static_cast<int>(
            units::parse_integer(foci_s.get("file_count"), foci_s.qualified("file_count")));
        double skew = units::parse_number(foci_s.get("zipf_skew"), foci_s.qualified("zipf_skew"));
        sc.foci.popularity = foci::zipf(file_count, skew);
    }
    validate(sc.foci);

    Section budget_s(raw, "budget");
    sc.budget.rsu_total =
        units::parse_rate(budget_s.get("rsu_total"), budget_s.qualified("rsu_total"));
    sc.budget.hap_total =
        units::parse_rate(budget_s.get("hap_total"), budget_s.qualified("hap_total"));
    sc.budget.vehicle_cache =
        units::parse_bits(budget_s.get("vehicle_cache"), budget_s.qualified("vehicle_cache"));
    sc.budget.block_count = static_cast<int>(
        units::parse_integer(budget_s.get("block_count"), budget_s.qualified("block_count")));
    validate(sc.budget);

    Section run_s(raw, "run");
    if (run_s.has("seed")) {
        sc.run.seed = static_cast<uint64_t>(
            units::parse_integer(run_s.get("seed"), run_s.qualified("seed")));
        sc.run.seed_set = true;
    }
    sc.run.warmup_fraction = units::parse_number(run_s.get_or("warmup_fraction", "0.1"),
                                                 run_s.qualified("warmup_fraction"));
    if (sc.run.warmup_fraction < 0.0 || sc.run.warmup_fraction >= 1.0)
        throw ConfigError("run.warmup_fraction: must be in [0,1)");
    sc.run.mana_vehicles = static_cast<uint64_t>(units::parse_integer(
        run_s.get_or("mana_vehicles", "100000"), run_s.qualified("mana_vehicles")));
    sc.run.foci_events = static_cast<uint64_t>(units::parse_integer(
        run_s.get_or("foci_events", "1000000"), run_s.qualified("foci_events")));
    sc.run.allow_unstable = units::parse_bool(run_s.get_or("allow_unstable", "false"),
                                              run_s.qualified("allow_unstable"));
    if (sc.run.mana_vehicles < 1) throw ConfigError("run.mana_vehicles: must be >= 1");
    if (sc.run.foci_events < 1) throw ConfigError("run.foci_events: must be >= 1");

    Section grid_s(raw, "grid");
    sc.grid = optimizer::default_grid();
    if (grid_s.has("c_m")) sc.grid.c_m_values = parse_int_values(grid_s.get("c_m"), "grid.c_m");
    if (grid_s.has("c_p")) sc.grid.c_p_values = parse_int_values(grid_s.get("c_p"), "grid.c_p");
    if (grid_s.has("r_hm"))
        sc.grid.r_hm_values = parse_rate_values(grid_s.get("r_hm"), "grid.r_hm");
    if (grid_s.has("r_hp"))
        sc.grid.r_hp_values = parse_rate_values(grid_s.get("r_hp"), "grid.r_hp");
    // Grids wider than the file catalog are clipped rather than rejected, so
    // one grid can serve sweeps that also vary file_count.
    while (!sc.grid.c_p_values.empty() &&
           sc.grid.c_p_values.back() > sc.foci.popularity.file_count())
        sc.grid.c_p_values.pop_back();
    optimizer::validate(sc.grid, sc.foci);
    return sc;
}

Scenario load(const std::string& path) { return resolve(load_raw(path)); }

std::string describe(const Scenario& sc) {
    std::ostringstream out;
    auto kv = [&out](const std::string& key, const std::string& value) {
        out << key << "=" << value << " ";
    };
    kv("mobility.vehicle_arrival_rate", format_double(sc.mobility.vehicle_arrival_rate));
    kv("mobility.erlang_shape", std::to_string(sc.mobility.erlang_shape));
    kv("mobility.erlang_rate", format_double(sc.mobility.erlang_rate));
    auto mob_it = sc.raw.find("mobility");
    if (mob_it != sc.raw.end() && mob_it->second.count("route"))
        kv("mobility.route", mob_it->second.at("route"));
    if (mob_it != sc.raw.end() && mob_it->second.count("continue_prob"))
        kv("mobility.continue_prob", mob_it->second.at("continue_prob"));
    if (mob_it != sc.raw.end() && mob_it->second.count("route_probs"))
        kv("mobility.route_probs", mob_it->second.at("route_probs"));
    kv("mana.map_size", format_double(sc.mana.map_size));
    kv("mana.cache_slots", std::to_string(sc.mana.cache_slots));
    kv("mana.hap_rate", format_double(sc.mana.hap_rate));
    kv("mana.rsu_rate", format_double(sc.mana.rsu_rate));
    kv("mana.delay_target", format_double(sc.mana.delay_target));
    kv("foci.file_size", format_double(sc.foci.file_size));
    kv("foci.cache_slots", std::to_string(sc.foci.cache_slots));
    kv("foci.hap_rate", format_double(sc.foci.hap_rate));
    kv("foci.rsu_rate", format_double(sc.foci.rsu_rate));
    kv("foci.expire_rate", format_double(sc.foci.expire_rate));
    kv("foci.request_rate", format_double(sc.foci.request_rate));
    auto foci_it = sc.raw.find("foci");
    if (foci_it != sc.raw.end() && foci_it->second.count("popularity")) {
        kv("foci.popularity", foci_it->second.at("popularity"));
    } else {
        kv("foci.file_count", std::to_string(sc.foci.popularity.file_count()));
        kv("foci.zipf_skew", foci_it != sc.raw.end() && foci_it->second.count("zipf_skew")
                                 ? foci_it->second.at("zipf_skew")
                                 : "0");
    }
    kv("foci.delay_target", format_double(sc.foci.delay_target));
    kv("budget.rsu_total", format_double(sc.budget.rsu_total));
    kv("budget.hap_total", format_double(sc.budget.hap_total));
    kv("budget.vehicle_cache", format_double(sc.budget.vehicle_cache));
    kv("budget.block_count", std::to_string(sc.budget.block_count));
    kv("run.seed", sc.run.seed_set ? std::to_string(sc.run.seed) : "auto");
    kv("run.warmup_fraction", format_double(sc.run.warmup_fraction));
    kv("run.mana_vehicles", std::to_string(sc.run.mana_vehicles));
    kv("run.foci_events", std::to_string(sc.run.foci_events));
    kv("run.allow_unstable", sc.run.allow_unstable ? "true" : "false");
    std::string s = out.str();
    if (!s.empty()) s.pop_back();
    return s;
}

}  // namespace agiven::config
