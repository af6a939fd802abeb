#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agiven/domain.hpp"

namespace agiven::optimizer {

// Search grid over the free resource variables of problem P1. The delay-
// constrained RSU rates are closed-form per point, so only four axes are
// gridded.
struct GridSpec {
    std::vector<int> c_m_values;
    std::vector<double> r_hm_values;
    std::vector<int> c_p_values;
    std::vector<double> r_hp_values;
};

GridSpec default_grid();
void validate(const GridSpec& grid, const FociConfig& foci);

// Everything the rate computation needs besides the gridded variables.
struct SliceDemand {
    ManaConfig mana;   // map_size, delay_target used; cache/hap filled per point
    FociConfig foci;   // file_size, expire_rate, request_rate, popularity, delay_target
    MobilityProfile mobility;
};

enum class Scheme { kOptimal, kFairRatio, kManaOnly, kFociOnly, kNoPush };
std::string scheme_name(Scheme s);

struct SchemeResult {
    Scheme scheme = Scheme::kOptimal;
    SlicingSolution solution;
    double rsu_saving = 0.0;  // 1 - total/(no-push total)
    double p_acc = 0.0;
    double p_hit = 0.0;
    double mg1_delay = 0.0;   // informational M/G/1 sojourn at the allocation
};

struct GridPoint {
    int c_m = 0;
    double r_hm = 0.0;
    int c_p = 0;
    double r_hp = 0.0;
};

struct PointRates {
    double r_rm = 0.0;
    double r_rp = 0.0;
    double p_acc = 0.0;
    double p_hit = 0.0;
    bool within_budget = false;  // R_RM + R_RP <= R_R
};

// Minimal delay-feasible RSU rates at the point, or nullopt when the cache
// or HAP constraint is violated there. Budget overrun is a flag, not an
// error: the allocation is still the best answer for reporting.
std::optional<PointRates> min_total_rsu(const GridPoint& point, const SliceDemand& demand,
                                        const ResourceBudget& budget);

// Exhaustive search maximizing R_R - R_RM - R_RP with a deterministic
// tie-break (smaller HAP spend, then smaller cache spend, then grid order).
// When no point keeps the objective non-negative the returned solution
// carries the argmax allocation flagged infeasible.
SchemeResult solve_p1(const ResourceBudget& budget, const SliceDemand& demand,
                      const GridSpec& grid);

// optimal, fair_ratio, mana_only, foci_only and the no_push baseline,
// all sharing the same grid (sub-set per scheme) and saving reference.
std::vector<SchemeResult> comparison_schemes(const ResourceBudget& budget,
                                             const SliceDemand& demand, const GridSpec& grid);

}  // namespace agiven::optimizer
