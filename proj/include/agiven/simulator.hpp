#pragma once

#include <cstdint>
#include <vector>

#include "agiven/domain.hpp"

namespace agiven::sim {

struct SimControl {
    uint64_t seed = 1;
    double warmup_fraction = 0.1;  // in [0,1): leading customers/events discarded
    uint64_t horizon = 100000;     // vehicles (MaNa) or events (FoCI)
    bool allow_unstable = false;   // run anyway when the analytic load is >= 1
};

struct ManaSimReport {
    uint64_t vehicles_simulated = 0;
    double empirical_p_acc = 0.0;
    double p_acc_std_error = 0.0;
    double empirical_mean_delay_all = 0.0;  // zero-service vehicles included
    double delay_all_std_error = 0.0;
    double empirical_mean_delay_served = 0.0;  // vehicles with remaining map only
    double empirical_mean_remaining = 0.0;     // bits
    double utilization = 0.0;
    double mean_in_system = 0.0;   // time-average N(t) for Little's law checks
    double effective_arrival_rate = 0.0;
};

struct FociSimReport {
    uint64_t events_simulated = 0;
    uint64_t requests = 0;
    uint64_t chain_transitions = 0;
    std::vector<double> empirical_occupancy;  // time-weighted, length C_p + 1
    double empirical_hit_ratio = 0.0;
    double hit_std_error = 0.0;
    double empirical_mean_delay = 0.0;  // miss stream sojourn at the RSU
    double delay_std_error = 0.0;
    double mean_in_system = 0.0;
    double effective_miss_rate = 0.0;
};

// Stream ids within a run; distinct ids give statistically independent draws.
enum StreamId : uint64_t {
    kArrivalStream = 0,
    kVehicleStream = 1,
    kEventStream = 2,
    kChoiceStream = 3,
};

// Monte Carlo of the tagged-RSU MaNa service process: Poisson vehicle
// arrivals, per-vehicle route block J and Erlang HAP window, remaining-map
// download through a FIFO single-server queue at R_RM.
ManaSimReport simulate_mana(const ManaConfig& cfg, const MobilityProfile& mob,
                            const SimControl& ctl);

// FoCI cache chain (birth R_HP/L_p, death mu_p) observed by Poisson requests;
// misses feed a deterministic-service FIFO queue at R_RP.
// When state_scaled_expiry is set the death rate becomes i*mu_p, which is a
// sensitivity variant and deliberately off the analytic chain.
FociSimReport simulate_foci(const FociConfig& cfg, const SimControl& ctl,
                            bool state_scaled_expiry = false);

}  // namespace agiven::sim
