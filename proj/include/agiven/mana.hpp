#pragma once

#include "agiven/domain.hpp"

namespace agiven::mana {

// Closed-form MaNa slice metrics. Pure functions over immutable configs.
struct ManaAnalysis {
    double p_acc = 0.0;        // long-run probability a block map completes over HAP
    double p_acc_lower = 0.0;
    double p_acc_upper = 0.0;
    double mean_service = 0.0;           // h bar, seconds at the RSU
    double service_second_moment = 0.0;  // h^2 bar, seconds^2
    double mg1_delay = 0.0;              // Pollaczek-Khinchine mean sojourn
    double md1_delay = 0.0;              // conservative M/D/1 bound
    double x = 0.0;                      // mu_v L_m / R_HM, window demand in dwell units
    double thinned_arrival = 0.0;        // lambda_v (1 - p_acc)
};

// Window demand x = mu_v L_m / R_HM (+inf when R_HM = 0).
double window_demand(const ManaConfig& cfg, const MobilityProfile& mob);

// P{vehicle completes the map of its J-th block over the HAP window}.
// 0 for J = 1 (no window) and for C_m = 0 or R_HM = 0.
double block_accomplishment(int block_index, const ManaConfig& cfg, const MobilityProfile& mob);

// Route-averaged accomplishment ratio and its closed-form bracket.
double accomplishment_ratio(const ManaConfig& cfg, const MobilityProfile& mob);
struct Bounds {
    double lower;
    double upper;
};
Bounds accomplishment_bounds(const ManaConfig& cfg, const MobilityProfile& mob);

// HAP rate where the growth of the upper-bound ratio turns from
// accelerating to decelerating: L_m mu_v / (K C_m + 2). Requires C_m >= 1.
double saddle_hap_rate(const ManaConfig& cfg, const MobilityProfile& mob);

// Mean and second moment of the map bits left for the RSU on block J.
double expected_remaining(int block_index, const ManaConfig& cfg, const MobilityProfile& mob);
double remaining_second_moment(int block_index, const ManaConfig& cfg, const MobilityProfile& mob);

// RSU service time stats for the M/G/1 model. Requires R_RM > 0.
double mean_service_time(const ManaConfig& cfg, const MobilityProfile& mob);
double service_second_moment(const ManaConfig& cfg, const MobilityProfile& mob);
double service_variance(const ManaConfig& cfg, const MobilityProfile& mob);

// Mean sojourn of the M/G/1 RSU queue (all vehicles, zero-service included).
// Throws InstabilityError when lambda_v * h >= 1.
double mg1_delay(const ManaConfig& cfg, const MobilityProfile& mob);

// Conservative M/D/1 bound: full map for every non-accomplished vehicle.
double md1_delay_bound(const ManaConfig& cfg, const MobilityProfile& mob);
double md1_delay_for(double thinned_arrival, double map_size, double rsu_rate);

// Smallest R_RM for which the M/D/1 bound meets the delay target.
double min_rsu_rate_mana(double p_acc, double vehicle_arrival_rate, double delay_target,
                         double map_size);

ManaAnalysis analyze(const ManaConfig& cfg, const MobilityProfile& mob);

}  // namespace agiven::mana
