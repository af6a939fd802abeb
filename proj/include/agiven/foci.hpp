#pragma once

#include <vector>

#include "agiven/domain.hpp"

namespace agiven::foci {

// Birth-death chain of valid on-board files: births at R_HP/L_p while the
// cache has room, deaths at mu_p while any file is valid.
struct CacheChain {
    double rho = 0.0;                 // mu_p L_p / R_HP, inverse normalized update rate
    int slots = 0;                    // C_p
    std::vector<double> steady_state; // r_0 .. r_{C_p}
};

struct FociAnalysis {
    double hit_ratio = 0.0;
    double thinned_arrival = 0.0;   // lambda_p (1 - P_hit)
    double mean_delay = 0.0;        // M/D/1 sojourn at the RSU
    double cache_utilization = 0.0; // sum_i i r_i / C_p
};

// Zipf(F, nu): p_f = f^-nu / sum_u u^-nu.
Popularity zipf(int file_count, double skewness);

// Steady state of the chain; uniform branch within 1e-9 of rho = 1.
std::vector<double> cache_steady_state(double rho, int slots);
CacheChain make_cache_chain(const FociConfig& cfg);

// On-board hit ratio, closed form of the chain average. slots <= F required.
double hit_ratio(const Popularity& pop, double rho, int slots);
// Same quantity as the explicit double sum over the steady state; the two
// routes agree to 1e-12 and the tests hold them to it.
double hit_ratio_direct(const Popularity& pop, double rho, int slots);

double cache_utilization(double rho, int slots);

// M/D/1 mean sojourn for the miss stream. Load lambda' L_p / R_RP must be < 1.
double foci_delay(double thinned_arrival, double file_size, double rsu_rate);

// Smallest R_RP meeting the delay target for the thinned request stream.
double min_rsu_rate_foci(double p_hit, double request_rate, double delay_target,
                         double file_size);

FociAnalysis analyze(const FociConfig& cfg);

}  // namespace agiven::foci
