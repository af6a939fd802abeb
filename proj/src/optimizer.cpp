#include "agiven/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <unordered_map>

#include "agiven/errors.hpp"
#include "agiven/foci.hpp"
#include "agiven/mana.hpp"

namespace agiven::optimizer {

namespace {

uint64_t value_key(int slots, double rate) {
    uint64_t bits;
    std::memcpy(&bits, &rate, sizeof(bits));
    return bits ^ (static_cast<uint64_t>(static_cast<uint32_t>(slots)) << 1);
}

// Lazy memo of the per-slice push metrics: p_acc depends on (c_m, r_hm) only
// and p_hit on (c_p, r_hp) only, so the 4-D walk reuses both tables.
class SliceTables {
public:
    explicit SliceTables(const SliceDemand& demand) : demand_(demand) {}

    double p_acc(int c_m, double r_hm) {
        auto [it, fresh] = acc_.try_emplace(value_key(c_m, r_hm), 0.0);
        if (fresh) {
            ManaConfig cfg = demand_.mana;
            cfg.cache_slots = c_m;
            cfg.hap_rate = r_hm;
            it->second = mana::accomplishment_ratio(cfg, demand_.mobility);
        }
        return it->second;
    }

    double p_hit(int c_p, double r_hp) {
        auto [it, fresh] = hit_.try_emplace(value_key(c_p, r_hp), 0.0);
        if (fresh) {
            double rho = r_hp > 0.0 ? demand_.foci.expire_rate * demand_.foci.file_size / r_hp
                                    : std::numeric_limits<double>::infinity();
            it->second = (c_p == 0 || std::isinf(rho))
                             ? 0.0
                             : foci::hit_ratio(demand_.foci.popularity, rho, c_p);
        }
        return it->second;
    }

private:
    const SliceDemand& demand_;
    std::unordered_map<uint64_t, double> acc_, hit_;
};

struct Candidate {
    double objective = -std::numeric_limits<double>::infinity();
    double hap_spend = 0.0;
    double cache_spend = 0.0;
    size_t order = 0;
    GridPoint point;
    PointRates rates;
    bool valid = false;

    bool beats(const Candidate& other) const {
        if (!other.valid) return true;
        if (objective != other.objective) return objective > other.objective;
        if (hap_spend != other.hap_spend) return hap_spend < other.hap_spend;
        if (cache_spend != other.cache_spend) return cache_spend < other.cache_spend;
        return order < other.order;
    }
};

// Exhaustive walk of the (sub-)grid. Feasible points (objective >= 0) always
// dominate infeasible ones; ties break toward smaller HAP spend, then smaller
// cache spend, then grid order.
Candidate search(const ResourceBudget& budget, const SliceDemand& demand, const GridSpec& grid,
                 SliceTables& tables) {
    Candidate best;
    size_t order = 0;
    for (int c_m : grid.c_m_values) {
        double mana_cache = c_m * demand.mana.map_size;
        if (mana_cache > budget.vehicle_cache) continue;
        for (double r_hm : grid.r_hm_values) {
            double mana_hap = budget.block_count * r_hm;
            if (mana_hap > budget.hap_total) continue;
            double p_acc = tables.p_acc(c_m, r_hm);
            double r_rm =
                mana::min_rsu_rate_mana(p_acc, demand.mobility.vehicle_arrival_rate,
                                        demand.mana.delay_target, demand.mana.map_size);
            for (int c_p : grid.c_p_values) {
                double cache = mana_cache + c_p * demand.foci.file_size;
                if (cache > budget.vehicle_cache) break;  // cache budget; c_p ascending
                for (double r_hp : grid.r_hp_values) {
                    ++order;
                    if (mana_hap + r_hp > budget.hap_total) break;  // HAP budget; r_hp ascending
                    double p_hit = tables.p_hit(c_p, r_hp);
                    double r_rp = foci::min_rsu_rate_foci(p_hit, demand.foci.request_rate,
                                                          demand.foci.delay_target,
                                                          demand.foci.file_size);
                    Candidate cand;
                    cand.objective = budget.rsu_total - r_rm - r_rp;
                    cand.hap_spend = mana_hap + r_hp;
                    cand.cache_spend = cache;
                    cand.order = order;
                    cand.point = {c_m, r_hm, c_p, r_hp};
                    cand.rates = {r_rm, r_rp, p_acc, p_hit, cand.objective >= 0.0};
                    cand.valid = true;
                    if (cand.rates.within_budget != best.rates.within_budget) {
                        if (cand.rates.within_budget) best = cand;
                    } else if (cand.beats(best)) {
                        best = cand;
                    }
                }
            }
        }
    }
    if (!best.valid)
        throw ConfigError("grid: no point satisfies the cache and HAP budget constraints");
    return best;
}

SchemeResult pack_result(Scheme scheme, const Candidate& best, const ResourceBudget& budget,
                         const SliceDemand& demand, double no_push_total) {
    SchemeResult r;
    r.scheme = scheme;
    r.p_acc = best.rates.p_acc;
    r.p_hit = best.rates.p_hit;
    SlicingSolution& s = r.solution;
    s.mana = {best.point.c_m, best.point.r_hm, best.rates.r_rm};
    s.foci = {best.point.c_p, best.point.r_hp, best.rates.r_rp};
    double total = best.rates.r_rm + best.rates.r_rp;
    s.objective = budget.rsu_total - total;
    s.feasible = best.rates.within_budget;
    s.mana_delay = mana::md1_delay_for(
        demand.mobility.vehicle_arrival_rate * (1.0 - best.rates.p_acc), demand.mana.map_size,
        best.rates.r_rm);
    s.foci_delay = foci::foci_delay(demand.foci.request_rate * (1.0 - best.rates.p_hit),
                                    demand.foci.file_size, best.rates.r_rp);
    r.rsu_saving = no_push_total > 0.0 ? 1.0 - total / no_push_total : 0.0;
    ManaConfig mc = demand.mana;
    mc.cache_slots = best.point.c_m;
    mc.hap_rate = best.point.r_hm;
    mc.rsu_rate = best.rates.r_rm;
    r.mg1_delay = mana::mg1_delay(mc, demand.mobility);
    return r;
}

double no_push_total(const SliceDemand& demand) {
    double r_rm = mana::min_rsu_rate_mana(0.0, demand.mobility.vehicle_arrival_rate,
                                          demand.mana.delay_target, demand.mana.map_size);
    double r_rp = foci::min_rsu_rate_foci(0.0, demand.foci.request_rate,
                                          demand.foci.delay_target, demand.foci.file_size);
    return r_rm + r_rp;
}

// Axis values not exceeding cap; the zero allocation is always available.
std::vector<int> capped(const std::vector<int>& values, double cap, double unit) {
    std::vector<int> out;
    for (int v : values)
        if (v * unit <= cap) out.push_back(v);
    if (out.empty() || out.front() != 0) out.insert(out.begin(), 0);
    return out;
}

std::vector<double> capped(const std::vector<double>& values, double cap) {
    std::vector<double> out;
    for (double v : values)
        if (v <= cap) out.push_back(v);
    if (out.empty() || out.front() != 0.0) out.insert(out.begin(), 0.0);
    return out;
}

}  // namespace

std::string scheme_name(Scheme s) {
    switch (s) {
        case Scheme::kOptimal: return "optimal";
        case Scheme::kFairRatio: return "fair_ratio";
        case Scheme::kManaOnly: return "mana_only";
        case Scheme::kFociOnly: return "foci_only";
        case Scheme::kNoPush: return "no_push";
    }
    return "?";
}

GridSpec default_grid() {
    GridSpec g;
    for (int c = 0; c <= 15; ++c) g.c_m_values.push_back(c);
    for (int c = 0; c <= 200; c += 10) g.c_p_values.push_back(c);
    for (int i = 0; i <= 20; ++i) g.r_hm_values.push_back(i * 0.5e6);
    for (int i = 0; i <= 50; ++i) g.r_hp_values.push_back(i * 0.1e6);
    return g;
}

void validate(const GridSpec& grid, const FociConfig& foci) {
    auto check_sorted = [](const auto& v, const std::string& name) {
        if (v.empty()) throw ConfigError(name + ": must not be empty");
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 0) throw ConfigError(name + ": values must be non-negative");
            if (i > 0 && v[i] <= v[i - 1])
                throw ConfigError(name + ": values must be strictly increasing");
        }
    };
    check_sorted(grid.c_m_values, "grid.c_m");
    check_sorted(grid.r_hm_values, "grid.r_hm");
    check_sorted(grid.c_p_values, "grid.c_p");
    check_sorted(grid.r_hp_values, "grid.r_hp");
    if (grid.c_p_values.back() > foci.popularity.file_count())
        throw ConfigError("grid.c_p: cannot exceed the number of distinct files");
}

std::optional<PointRates> min_total_rsu(const GridPoint& point, const SliceDemand& demand,
                                        const ResourceBudget& budget) {
    if (point.c_m < 0 || point.c_p < 0 || point.r_hm < 0.0 || point.r_hp < 0.0)
        throw ConfigError("grid point: values must be non-negative");
    if (point.c_m * demand.mana.map_size + point.c_p * demand.foci.file_size >
        budget.vehicle_cache)
        return std::nullopt;  // cache overrun
    if (budget.block_count * point.r_hm + point.r_hp > budget.hap_total)
        return std::nullopt;  // HAP rate overrun
    PointRates rates;
    ManaConfig mc = demand.mana;
    mc.cache_slots = point.c_m;
    mc.hap_rate = point.r_hm;
    rates.p_acc = mana::accomplishment_ratio(mc, demand.mobility);
    double rho = point.r_hp > 0.0
                     ? demand.foci.expire_rate * demand.foci.file_size / point.r_hp
                     : std::numeric_limits<double>::infinity();
    rates.p_hit = (point.c_p == 0 || std::isinf(rho))
                      ? 0.0
                      : foci::hit_ratio(demand.foci.popularity, rho, point.c_p);
    rates.r_rm = mana::min_rsu_rate_mana(rates.p_acc, demand.mobility.vehicle_arrival_rate,
                                         demand.mana.delay_target, demand.mana.map_size);
    rates.r_rp = foci::min_rsu_rate_foci(rates.p_hit, demand.foci.request_rate,
                                         demand.foci.delay_target, demand.foci.file_size);
    rates.within_budget = rates.r_rm + rates.r_rp <= budget.rsu_total;
    return rates;
}

SchemeResult solve_p1(const ResourceBudget& budget, const SliceDemand& demand,
                      const GridSpec& grid) {
    SliceTables tables(demand);
    Candidate best = search(budget, demand, grid, tables);
    return pack_result(Scheme::kOptimal, best, budget, demand, no_push_total(demand));
}

std::vector<SchemeResult> comparison_schemes(const ResourceBudget& budget,
                                             const SliceDemand& demand, const GridSpec& base) {
    SliceTables tables(demand);
    double baseline = no_push_total(demand);
    std::vector<SchemeResult> out;

    // Every scheme draws from the same base set, with the zero allocation
    // always present so the degenerate schemes are inside the optimal search.
    GridSpec grid = base;
    grid.c_m_values = capped(base.c_m_values, std::numeric_limits<double>::infinity(), 1.0);
    grid.c_p_values = capped(base.c_p_values, std::numeric_limits<double>::infinity(), 1.0);
    grid.r_hm_values = capped(base.r_hm_values, std::numeric_limits<double>::infinity());
    grid.r_hp_values = capped(base.r_hp_values, std::numeric_limits<double>::infinity());

    out.push_back(pack_result(Scheme::kOptimal, search(budget, demand, grid, tables), budget,
                              demand, baseline));

    // Fair ratio: split cache and HAP budget by the per-RSU offered bit loads.
    double mana_load = demand.mobility.vehicle_arrival_rate * demand.mana.map_size;
    double foci_load = demand.foci.request_rate * demand.foci.file_size;
    double w = mana_load + foci_load > 0.0 ? mana_load / (mana_load + foci_load) : 1.0;
    GridSpec fair = grid;
    fair.c_m_values = capped(grid.c_m_values, w * budget.vehicle_cache, demand.mana.map_size);
    fair.r_hm_values = capped(grid.r_hm_values, w * budget.hap_total / budget.block_count);
    fair.c_p_values =
        capped(grid.c_p_values, (1.0 - w) * budget.vehicle_cache, demand.foci.file_size);
    fair.r_hp_values = capped(grid.r_hp_values, (1.0 - w) * budget.hap_total);
    out.push_back(pack_result(Scheme::kFairRatio, search(budget, demand, fair, tables), budget,
                              demand, baseline));

    GridSpec mana_only = grid;
    mana_only.c_p_values = {0};
    mana_only.r_hp_values = {0.0};
    out.push_back(pack_result(Scheme::kManaOnly, search(budget, demand, mana_only, tables),
                              budget, demand, baseline));

    GridSpec foci_only = grid;
    foci_only.c_m_values = {0};
    foci_only.r_hm_values = {0.0};
    out.push_back(pack_result(Scheme::kFociOnly, search(budget, demand, foci_only, tables),
                              budget, demand, baseline));

    GridSpec none;
    none.c_m_values = {0};
    none.r_hm_values = {0.0};
    none.c_p_values = {0};
    none.r_hp_values = {0.0};
    out.push_back(pack_result(Scheme::kNoPush, search(budget, demand, none, tables), budget,
                              demand, baseline));
    return out;
}

}  // namespace agiven::optimizer
