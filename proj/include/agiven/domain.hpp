#pragma once

#include <string>
#include <vector>

namespace agiven {

// ---------------------------------------------------------------------------
// Value types. Canonical units throughout: bits, seconds, bits/second.
// All types are immutable after validate() and safe to share across threads.
// ---------------------------------------------------------------------------

// Content popularity by rank, p_f non-increasing, sums to 1.
struct Popularity {
    std::vector<double> probs;

    int file_count() const { return static_cast<int>(probs.size()); }
    // Sum of the top-n ranks (n clamped to [0, F]).
    double head_mass(int n) const;
};

// Route length in blocks: probs[j] = G_{j+1}, truncated and renormalized.
struct RouteDistribution {
    std::vector<double> probs;

    int max_blocks() const { return static_cast<int>(probs.size()); }
    double prob(int j) const {  // G_J, 1-based
        return (j >= 1 && j <= max_blocks()) ? probs[j - 1] : 0.0;
    }
    double tail_from(int j) const;  // sum of G_J for J >= j
};

struct GeometricRoute {
    double continue_prob = 0.0;  // psi: keep driving with prob psi, park with 1-psi
};

// Tail mass below this is dropped when truncating an infinite route law.
constexpr double kRouteTailTolerance = 1e-9;

RouteDistribution make_geometric_route(const GeometricRoute& route);
RouteDistribution make_explicit_route(std::vector<double> probs);

struct MobilityProfile {
    double vehicle_arrival_rate = 0.0;  // lambda_v, vehicles/s entering a block
    int erlang_shape = 1;               // K
    double erlang_rate = 0.0;           // mu_v, 1/s; mean dwell K/mu_v
    RouteDistribution route_dist;
};

struct ManaConfig {
    double map_size = 0.0;      // L_m, bits per block map
    int cache_slots = 0;        // C_m, maps cached on board
    double hap_rate = 0.0;      // R_HM, broadcast rate per map
    double rsu_rate = 0.0;      // R_RM
    double delay_target = 0.0;  // T_m hat, seconds
};

struct FociConfig {
    double file_size = 0.0;     // L_p, bits
    int cache_slots = 0;        // C_p, files cached on board
    double hap_rate = 0.0;      // R_HP
    double rsu_rate = 0.0;      // R_RP
    double expire_rate = 0.0;   // mu_p, 1/s
    double request_rate = 0.0;  // lambda_p, requests/s per RSU
    Popularity popularity;
    double delay_target = 0.0;  // T_p hat, seconds
};

struct ResourceBudget {
    double rsu_total = 0.0;     // R_R, bits/s per RSU
    double hap_total = 0.0;     // R_H, bits/s per HAP cell
    double vehicle_cache = 0.0; // L_v, bits
    int block_count = 0;        // N_block covered by the HAP cell
};

struct SliceAllocation {
    int cache_slots = 0;
    double hap_rate = 0.0;
    double rsu_rate = 0.0;
};

struct SlicingSolution {
    SliceAllocation mana;
    SliceAllocation foci;
    double objective = 0.0;   // R_R - R_RM - R_RP, bits/s left for ODT
    double mana_delay = 0.0;  // M/D/1 bound at the allocation, seconds
    double foci_delay = 0.0;
    bool feasible = false;
};

// Each throws ConfigError naming the first violated field.
void validate(const Popularity& p);
void validate(const MobilityProfile& m);
void validate(const ManaConfig& c);
void validate(const FociConfig& c);
void validate(const ResourceBudget& b);

}  // namespace agiven
