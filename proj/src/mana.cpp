#include "agiven/mana.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "agiven/errors.hpp"
#include "agiven/numerics.hpp"

namespace agiven::mana {

using numerics::reg_lower_gamma;
using numerics::reg_upper_gamma;

namespace {

// Shape of the HAP window for block J: K * min(J-1, C_m) dwell stages.
int window_shape(int block_index, const ManaConfig& cfg, const MobilityProfile& mob) {
    return mob.erlang_shape * std::min(block_index - 1, cfg.cache_slots);
}

// E[L_J^-]/L_m for a window of gamma shape s:
//   P(s,x) - (s/x) P(s+1,x)
// which equals the (1 - s/x) gamma + x^{s-1}e^{-x}/(s-1)! form by the
// incomplete-gamma recurrence, but needs no isolated density term.
double remaining_mean_factor(int s, double x) {
    if (s == 0) return 1.0;  // no window at all
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    double v = reg_lower_gamma(s, x) - (s / x) * reg_lower_gamma(s + 1, x);
    return std::clamp(v, 0.0, 1.0);
}

// E[(L_J^-)^2]/L_m^2 for shape s:
//   P(s,x) - 2(s/x) P(s+1,x) + s(s+1)/x^2 P(s+2,x)
double remaining_second_factor(int s, double x) {
    if (s == 0) return 1.0;
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    double sd = s;
    double v = reg_lower_gamma(s, x) - 2.0 * (sd / x) * reg_lower_gamma(s + 1, x) +
               sd * (sd + 1.0) / (x * x) * reg_lower_gamma(s + 2, x);
    return std::clamp(v, 0.0, 1.0);
}

// Route-weighted sum of a per-shape factor; shapes repeat once J-1 >= C_m so
// the tail collapses into a single closed-form term.
template <typename FactorFn>
double route_average(const ManaConfig& cfg, const MobilityProfile& mob, FactorFn factor) {
    const auto& route = mob.route_dist;
    double x = window_demand(cfg, mob);
    double acc = route.prob(1) * factor(0, x);
    int j = 2;
    for (; j <= cfg.cache_slots && j <= route.max_blocks(); ++j)
        acc += route.prob(j) * factor(mob.erlang_shape * (j - 1), x);
    if (j <= route.max_blocks())
        acc += route.tail_from(j) * factor(mob.erlang_shape * std::min(j - 1, cfg.cache_slots), x);
    return acc;
}

}  // namespace

double window_demand(const ManaConfig& cfg, const MobilityProfile& mob) {
    if (cfg.hap_rate <= 0.0) return std::numeric_limits<double>::infinity();
    return mob.erlang_rate * cfg.map_size / cfg.hap_rate;
}

double block_accomplishment(int block_index, const ManaConfig& cfg, const MobilityProfile& mob) {
    if (block_index < 1) throw ConfigError("block_index: must be >= 1");
    if (block_index == 1 || cfg.cache_slots == 0 || cfg.hap_rate <= 0.0) return 0.0;
    int s = window_shape(block_index, cfg, mob);
    return reg_upper_gamma(s, window_demand(cfg, mob));
}

double accomplishment_ratio(const ManaConfig& cfg, const MobilityProfile& mob) {
    if (cfg.cache_slots == 0 || cfg.hap_rate <= 0.0) return 0.0;
    return route_average(cfg, mob, [](int s, double x) {
        return (s == 0 || std::isinf(x)) ? 0.0 : reg_upper_gamma(s, x);
    });
}

Bounds accomplishment_bounds(const ManaConfig& cfg, const MobilityProfile& mob) {
    if (cfg.cache_slots == 0 || cfg.hap_rate <= 0.0) return {0.0, 0.0};
    double upper = reg_upper_gamma(mob.erlang_shape * cfg.cache_slots, window_demand(cfg, mob));
    double lower = mob.route_dist.tail_from(cfg.cache_slots + 1) * upper;
    return {lower, upper};
}

double saddle_hap_rate(const ManaConfig& cfg, const MobilityProfile& mob) {
    if (cfg.cache_slots < 1)
        throw ConfigError("cache_slots: saddle point undefined without cache");
    return cfg.map_size * mob.erlang_rate / (mob.erlang_shape * cfg.cache_slots + 2.0);
}

double expected_remaining(int block_index, const ManaConfig& cfg, const MobilityProfile& mob) {
    if (block_index < 1) throw ConfigError("block_index: must be >= 1");
    return cfg.map_size *
           remaining_mean_factor(window_shape(block_index, cfg, mob), window_demand(cfg, mob));
}

double remaining_second_moment(int block_index, const ManaConfig& cfg,
                               const MobilityProfile& mob) {
    if (block_index < 1) throw ConfigError("block_index: must be >= 1");
    return cfg.map_size * cfg.map_size *
           remaining_second_factor(window_shape(block_index, cfg, mob), window_demand(cfg, mob));
}

double mean_service_time(const ManaConfig& cfg, const MobilityProfile& mob) {
    if (!(cfg.rsu_rate > 0.0)) throw ConfigError("rsu_rate: RSU rate required");
    return cfg.map_size / cfg.rsu_rate * route_average(cfg, mob, remaining_mean_factor);
}

double service_second_moment(const ManaConfig& cfg, const MobilityProfile& mob) {
    if (!(cfg.rsu_rate > 0.0)) throw ConfigError("rsu_rate: RSU rate required");
    double l_over_r = cfg.map_size / cfg.rsu_rate;
    return l_over_r * l_over_r * route_average(cfg, mob, remaining_second_factor);
}

double service_variance(const ManaConfig& cfg, const MobilityProfile& mob) {
    double h = mean_service_time(cfg, mob);
    return std::max(0.0, service_second_moment(cfg, mob) - h * h);
}

double mg1_delay(const ManaConfig& cfg, const MobilityProfile& mob) {
    double h = mean_service_time(cfg, mob);
    double h2 = service_second_moment(cfg, mob);
    double util = mob.vehicle_arrival_rate * h;
    if (util >= 1.0)
        throw InstabilityError("mana RSU queue unstable: utilization >= 1", util);
    return h + mob.vehicle_arrival_rate * h2 / (2.0 * (1.0 - util));
}

double md1_delay_for(double thinned_arrival, double map_size, double rsu_rate) {
    if (!(rsu_rate > 0.0)) throw ConfigError("rsu_rate: RSU rate required");
    double h = map_size / rsu_rate;
    double load = thinned_arrival * h;
    if (load >= 1.0)
        throw InstabilityError("mana M/D/1 bound unstable: load >= 1", load);
    return h + load * h / (2.0 * (1.0 - load));
}

double md1_delay_bound(const ManaConfig& cfg, const MobilityProfile& mob) {
    double thinned = mob.vehicle_arrival_rate * (1.0 - accomplishment_ratio(cfg, mob));
    return md1_delay_for(thinned, cfg.map_size, cfg.rsu_rate);
}

double min_rsu_rate_mana(double p_acc, double vehicle_arrival_rate, double delay_target,
                         double map_size) {
    if (!(delay_target > 0.0)) throw ConfigError("delay_target: must be positive");
    double z = vehicle_arrival_rate * (1.0 - p_acc) * delay_target;
    // Stable form of z T / (1 + z - sqrt(z^2+1)) * L/T; exact L/T limit at z = 0.
    return (map_size / delay_target) / (1.0 - z / (1.0 + std::sqrt(1.0 + z * z)));
}

ManaAnalysis analyze(const ManaConfig& cfg, const MobilityProfile& mob) {
    ManaAnalysis a;
    a.x = window_demand(cfg, mob);
    a.p_acc = accomplishment_ratio(cfg, mob);
    Bounds b = accomplishment_bounds(cfg, mob);
    a.p_acc_lower = b.lower;
    a.p_acc_upper = b.upper;
    a.mean_service = mean_service_time(cfg, mob);
    a.service_second_moment = service_second_moment(cfg, mob);
    a.thinned_arrival = mob.vehicle_arrival_rate * (1.0 - a.p_acc);
    a.mg1_delay = mg1_delay(cfg, mob);
    a.md1_delay = md1_delay_for(a.thinned_arrival, cfg.map_size, cfg.rsu_rate);
    return a;
}

}  // namespace agiven::mana
