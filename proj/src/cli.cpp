#include "agiven/cli.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <iostream>
#include <random>
#include <thread>

#include "agiven/errors.hpp"
#include "agiven/foci.hpp"
#include "agiven/mana.hpp"
#include "agiven/optimizer.hpp"
#include "agiven/rng.hpp"
#include "agiven/simulator.hpp"

namespace agiven::cli {

namespace {

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::kAnalyze: return "analyze";
        case Mode::kSimulate: return "simulate";
        case Mode::kOptimize: return "optimize";
        case Mode::kSweep: return "sweep";
    }
    return "?";
}

uint64_t derive_seed(uint64_t base, uint64_t index) {
    uint64_t state = base ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    return sim::splitmix64(state);
}

double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
    double tv = 0.0;
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) tv += std::fabs(a[i] - b[i]);
    return 0.5 * tv;
}

}  // namespace

std::vector<io::Row> analyze_rows(const config::Scenario& sc) {
    io::Row row;
    mana::ManaAnalysis ma = mana::analyze(sc.mana, sc.mobility);
    row["mana_p_acc"] = ma.p_acc;
    row["mana_p_acc_lower"] = ma.p_acc_lower;
    row["mana_p_acc_upper"] = ma.p_acc_upper;
    row["mana_x"] = std::isinf(ma.x) ? -1.0 : ma.x;
    row["mana_mean_service_s"] = ma.mean_service;
    row["mana_service_second_moment_s2"] = ma.service_second_moment;
    row["mana_mg1_delay_s"] = ma.mg1_delay;
    row["mana_md1_delay_s"] = ma.md1_delay;
    row["mana_thinned_arrival"] = ma.thinned_arrival;
    row["mana_min_rsu_rate_bps"] =
        mana::min_rsu_rate_mana(ma.p_acc, sc.mobility.vehicle_arrival_rate,
                                sc.mana.delay_target, sc.mana.map_size);
    row["mana_saddle_hap_rate_bps"] =
        sc.mana.cache_slots >= 1 ? mana::saddle_hap_rate(sc.mana, sc.mobility) : 0.0;
    foci::FociAnalysis fa = foci::analyze(sc.foci);
    double rho = sc.foci.hap_rate > 0.0
                     ? sc.foci.expire_rate * sc.foci.file_size / sc.foci.hap_rate
                     : -1.0;
    row["foci_rho"] = rho;
    row["foci_hit_ratio"] = fa.hit_ratio;
    row["foci_thinned_arrival"] = fa.thinned_arrival;
    row["foci_delay_s"] = fa.mean_delay;
    row["foci_cache_utilization"] = fa.cache_utilization;
    row["foci_min_rsu_rate_bps"] = foci::min_rsu_rate_foci(
        fa.hit_ratio, sc.foci.request_rate, sc.foci.delay_target, sc.foci.file_size);
    return {row};
}

std::vector<io::Row> simulate_rows(const config::Scenario& sc, uint64_t seed) {
    io::Row row;
    row["seed"] = seed;

    sim::SimControl mana_ctl{seed, sc.run.warmup_fraction, sc.run.mana_vehicles,
                             sc.run.allow_unstable};
    mana::ManaAnalysis ma = mana::analyze(sc.mana, sc.mobility);
    sim::ManaSimReport mr = sim::simulate_mana(sc.mana, sc.mobility, mana_ctl);
    row["mana_vehicles"] = mr.vehicles_simulated;
    row["mana_p_acc_analytic"] = ma.p_acc;
    row["mana_p_acc_empirical"] = mr.empirical_p_acc;
    row["mana_p_acc_se"] = mr.p_acc_std_error;
    row["mana_mg1_delay_analytic_s"] = ma.mg1_delay;
    row["mana_delay_all_empirical_s"] = mr.empirical_mean_delay_all;
    row["mana_delay_all_se"] = mr.delay_all_std_error;
    row["mana_delay_served_empirical_s"] = mr.empirical_mean_delay_served;
    row["mana_md1_bound_analytic_s"] = ma.md1_delay;
    row["mana_remaining_analytic_bits"] = ma.mean_service * sc.mana.rsu_rate;
    row["mana_remaining_empirical_bits"] = mr.empirical_mean_remaining;
    row["mana_utilization"] = mr.utilization;

    sim::SimControl foci_ctl{seed, sc.run.warmup_fraction, sc.run.foci_events,
                             sc.run.allow_unstable};
    foci::FociAnalysis fa = foci::analyze(sc.foci);
    sim::FociSimReport fr = sim::simulate_foci(sc.foci, foci_ctl);
    row["foci_events"] = fr.events_simulated;
    row["foci_requests"] = fr.requests;
    row["foci_hit_analytic"] = fa.hit_ratio;
    row["foci_hit_empirical"] = fr.empirical_hit_ratio;
    row["foci_hit_se"] = fr.hit_std_error;
    row["foci_delay_analytic_s"] = fa.mean_delay;
    row["foci_delay_empirical_s"] = fr.empirical_mean_delay;
    row["foci_delay_se"] = fr.delay_std_error;
    auto chain = foci::make_cache_chain(sc.foci);
    row["foci_occupancy_tv"] = total_variation(fr.empirical_occupancy, chain.steady_state);
    return {row};
}

std::vector<io::Row> optimize_rows(const config::Scenario& sc) {
    optimizer::SliceDemand demand{sc.mana, sc.foci, sc.mobility};
    auto schemes = optimizer::comparison_schemes(sc.budget, demand, sc.grid);
    std::vector<io::Row> rows;
    for (const auto& s : schemes) {
        io::Row row;
        row["scheme"] = optimizer::scheme_name(s.scheme);
        row["feasible"] = s.solution.feasible;
        row["c_m"] = s.solution.mana.cache_slots;
        row["r_hm_bps"] = s.solution.mana.hap_rate;
        row["r_rm_bps"] = s.solution.mana.rsu_rate;
        row["c_p"] = s.solution.foci.cache_slots;
        row["r_hp_bps"] = s.solution.foci.hap_rate;
        row["r_rp_bps"] = s.solution.foci.rsu_rate;
        row["objective_bps"] = s.solution.objective;
        row["rsu_saving"] = s.rsu_saving;
        row["p_acc"] = s.p_acc;
        row["p_hit"] = s.p_hit;
        row["mana_md1_delay_s"] = s.solution.mana_delay;
        row["foci_delay_s"] = s.solution.foci_delay;
        row["mana_mg1_delay_s"] = s.mg1_delay;
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::vector<io::Row> rows_for(const std::string& submode, const config::Scenario& sc,
                              uint64_t seed) {
    if (submode == "analyze") return analyze_rows(sc);
    if (submode == "simulate") return simulate_rows(sc, seed);
    if (submode == "optimize") return optimize_rows(sc);
    throw ConfigError("sweep mode must be analyze, simulate or optimize");
}

struct SweepPoint {
    std::vector<std::pair<std::string, std::string>> overrides;
};

std::vector<SweepPoint> cartesian(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& axes) {
    std::vector<SweepPoint> points{{}};
    for (const auto& [key, values] : axes) {
        std::vector<SweepPoint> next;
        for (const auto& p : points)
            for (const auto& v : values) {
                SweepPoint q = p;
                q.overrides.emplace_back(key, v);
                next.push_back(std::move(q));
            }
        points = std::move(next);
    }
    return points;
}

}  // namespace

int run(const RunSpec& spec, std::ostream& err) {
    try {
        config::Scenario sc = config::load(spec.config_path);
        uint64_t seed;
        if (spec.seed) {
            seed = *spec.seed;
        } else if (sc.run.seed_set) {
            seed = sc.run.seed;
        } else {
            seed = std::random_device{}();
        }
        sc.run.seed = seed;
        sc.run.seed_set = true;

        std::vector<io::Row> rows;
        if (spec.mode == Mode::kSweep) {
            if (spec.sweep_axes.empty())
                throw ConfigError("sweep mode requires at least one --sweep key=v1,v2,...");
            auto points = cartesian(spec.sweep_axes);
            size_t n = points.size();
            unsigned workers = spec.workers > 0
                                   ? static_cast<unsigned>(spec.workers)
                                   : std::max(1u, std::thread::hardware_concurrency());
            std::vector<std::vector<io::Row>> results(n);
            for (size_t base = 0; base < n; base += workers) {
                size_t end = std::min(n, base + workers);
                std::vector<std::future<std::vector<io::Row>>> futs;
                for (size_t i = base; i < end; ++i) {
                    futs.push_back(std::async(std::launch::async, [&, i]() {
                        config::RawConfig raw = sc.raw;
                        for (const auto& [key, value] : points[i].overrides)
                            config::override_key(raw, key, value);
                        config::Scenario point_sc = config::resolve(raw);
                        std::vector<io::Row> point_rows =
                            rows_for(spec.sweep_mode, point_sc, derive_seed(seed, i));
                        for (auto& row : point_rows) {
                            io::Row prefixed;
                            for (const auto& [key, value] : points[i].overrides) {
                                std::string col = "sweep_" + key;
                                std::replace(col.begin(), col.end(), '.', '_');
                                prefixed[col] = value;
                            }
                            prefixed.update(row);
                            row = std::move(prefixed);
                        }
                        return point_rows;
                    }));
                }
                for (size_t i = base; i < end; ++i) results[i] = futs[i - base].get();
            }
            for (auto& r : results)
                for (auto& row : r) rows.push_back(std::move(row));
        } else if (spec.mode == Mode::kAnalyze) {
            rows = analyze_rows(sc);
        } else if (spec.mode == Mode::kSimulate) {
            rows = simulate_rows(sc, seed);
        } else {
            rows = optimize_rows(sc);
        }

        std::string meta = "agiven " + mode_name(spec.mode) +
                           (spec.mode == Mode::kSweep ? " " + spec.sweep_mode : "") +
                           " seed=" + std::to_string(seed);
        for (const auto& [key, values] : spec.sweep_axes) {
            meta += " sweep:" + key + "=";
            for (size_t i = 0; i < values.size(); ++i)
                meta += (i ? "," : "") + values[i];
        }
        meta += " " + config::describe(sc);
        io::write_csv(spec.output_path, meta, rows);
        if (spec.json_mirror) io::write_json(spec.output_path + ".json", meta, rows);
        return kExitOk;
    } catch (const InstabilityError& e) {
        err << "model error: " << e.what() << "\n";
        return kExitModel;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
}

}  // namespace agiven::cli
