#include "agiven/simulator.hpp"

#include <algorithm>
#include <cmath>

#include "agiven/errors.hpp"
#include "agiven/foci.hpp"
#include "agiven/mana.hpp"
#include "agiven/numerics.hpp"
#include "agiven/queue.hpp"
#include "agiven/rng.hpp"

namespace agiven::sim {

namespace {

// Inverse-CDF sample of the route block index J (1-based).
int sample_route(const RouteDistribution& route, double u) {
    double acc = 0.0;
    int last = route.max_blocks();
    for (int j = 1; j <= last; ++j) {
        acc += route.prob(j);
        if (u < acc) return j;
    }
    return last;
}

}  // namespace

ManaSimReport simulate_mana(const ManaConfig& cfg, const MobilityProfile& mob,
                            const SimControl& ctl) {
    if (ctl.horizon < 1) throw ConfigError("horizon: must be >= 1");
    if (!(cfg.rsu_rate > 0.0)) throw ConfigError("rsu_rate: RSU rate required");
    double util = mob.vehicle_arrival_rate * mana::mean_service_time(cfg, mob);
    if (util >= 1.0 && !ctl.allow_unstable)
        throw InstabilityError("mana simulation refused: analytic utilization >= 1", util);

    RandomStream arrivals(ctl.seed, kArrivalStream);
    RandomStream vehicles(ctl.seed, kVehicleStream);

    uint64_t n = ctl.horizon;
    uint64_t warm = static_cast<uint64_t>(ctl.warmup_fraction * static_cast<double>(n));
    FifoQueue queue;
    BatchMeans acc_stat, delay_stat;
    double sum_delay_served = 0.0, sum_remaining = 0.0;
    uint64_t served = 0, counted = 0;
    double t = 0.0;

    for (uint64_t i = 0; i < n; ++i) {
        t += arrivals.exponential(mob.vehicle_arrival_rate);
        int j = sample_route(mob.route_dist, vehicles.uniform());
        int stages = mob.erlang_shape * std::min(j - 1, cfg.cache_slots);
        double window = 0.0;
        for (int k = 0; k < stages; ++k) window += vehicles.exponential(mob.erlang_rate);
        double remaining = std::max(0.0, cfg.map_size - cfg.hap_rate * window);
        double sojourn = queue.process(t, remaining / cfg.rsu_rate);
        if (i < warm) continue;
        ++counted;
        acc_stat.add(remaining == 0.0 ? 1.0 : 0.0);
        delay_stat.add(sojourn);
        sum_remaining += remaining;
        if (remaining > 0.0) {
            sum_delay_served += sojourn;
            ++served;
        }
    }

    ManaSimReport rep;
    rep.vehicles_simulated = counted;
    rep.empirical_p_acc = acc_stat.mean();
    rep.p_acc_std_error = acc_stat.std_error();
    rep.empirical_mean_delay_all = delay_stat.mean();
    rep.delay_all_std_error = delay_stat.std_error();
    rep.empirical_mean_delay_served = served ? sum_delay_served / served : 0.0;
    rep.empirical_mean_remaining = counted ? sum_remaining / counted : 0.0;
    rep.utilization = queue.observed_span() > 0.0 ? queue.busy_time() / queue.observed_span() : 0.0;
    rep.mean_in_system = queue.mean_in_system();
    rep.effective_arrival_rate =
        queue.observed_span() > 0.0 ? static_cast<double>(queue.customers()) / queue.observed_span()
                                    : 0.0;
    return rep;
}

FociSimReport simulate_foci(const FociConfig& cfg, const SimControl& ctl,
                            bool state_scaled_expiry) {
    if (ctl.horizon < 1) throw ConfigError("horizon: must be >= 1");
    double birth = cfg.hap_rate > 0.0 ? cfg.hap_rate / cfg.file_size : 0.0;
    if (birth <= 0.0 && cfg.expire_rate <= 0.0 && cfg.request_rate <= 0.0)
        throw ConfigError("foci simulation: no event source (all rates zero)");
    if (cfg.request_rate > 0.0) {
        if (!(cfg.rsu_rate > 0.0)) throw ConfigError("rsu_rate: RSU rate required");
        double load = foci::analyze(cfg).thinned_arrival * cfg.file_size / cfg.rsu_rate;
        if (load >= 1.0 && !ctl.allow_unstable)
            throw InstabilityError("foci simulation refused: analytic load >= 1", load);
    }

    RandomStream times(ctl.seed, kEventStream);
    RandomStream choices(ctl.seed, kChoiceStream);

    const int c = cfg.cache_slots;
    if (cfg.popularity.file_count() < c)
        throw ConfigError("cache_slots: cannot exceed the number of distinct files");
    std::vector<double> cum_head(c + 1, 0.0);
    for (int i = 1; i <= c; ++i) cum_head[i] = cum_head[i - 1] + cfg.popularity.probs[i - 1];

    uint64_t n = ctl.horizon;
    uint64_t warm = static_cast<uint64_t>(ctl.warmup_fraction * static_cast<double>(n));
    std::vector<double> occupancy(c + 1, 0.0);
    FifoQueue queue;
    BatchMeans hit_stat, delay_stat;
    const double service = cfg.rsu_rate > 0.0 ? cfg.file_size / cfg.rsu_rate : 0.0;

    // Start at the mode of the analytic steady state: the slow chain (rates
    // ~mu_p) would otherwise need a fill-in period far longer than any
    // reasonable warmup, and the overloaded miss queue of that period would
    // leak into the measurement window. The warmup still washes the choice.
    auto chain = foci::make_cache_chain(cfg);
    int state = 0;
    for (int i = 1; i <= c; ++i)
        if (chain.steady_state[i] > chain.steady_state[state]) state = i;
    double t = 0.0;
    uint64_t transitions = 0, requests = 0, events = 0;

    for (uint64_t i = 0; i < n; ++i) {
        double rb = state < c ? birth : 0.0;
        double rd = state > 0 ? (state_scaled_expiry ? state * cfg.expire_rate : cfg.expire_rate)
                              : 0.0;
        double rr = cfg.request_rate;
        double total = rb + rd + rr;
        if (total <= 0.0) break;  // absorbing corner, nothing more can happen
        double dt = times.exponential(total);
        if (i >= warm) occupancy[state] += dt;
        t += dt;
        ++events;
        double u = choices.uniform() * total;
        if (u < rb) {
            ++state;
            ++transitions;
        } else if (u < rb + rd) {
            --state;
            ++transitions;
        } else {
            ++requests;
            bool hit = choices.uniform() < cum_head[state];
            double sojourn = hit ? 0.0 : queue.process(t, service);
            if (i >= warm) {
                hit_stat.add(hit ? 1.0 : 0.0);
                if (!hit) delay_stat.add(sojourn);
            }
        }
    }

    FociSimReport rep;
    rep.events_simulated = events;
    rep.requests = requests;
    rep.chain_transitions = transitions;
    double total_time = 0.0;
    for (double v : occupancy) total_time += v;
    rep.empirical_occupancy.resize(c + 1, 0.0);
    if (total_time > 0.0) {
        for (int i = 0; i <= c; ++i) rep.empirical_occupancy[i] = occupancy[i] / total_time;
    } else {
        rep.empirical_occupancy[state] = 1.0;  // frozen chain, nothing ever moved
    }
    rep.empirical_hit_ratio = hit_stat.mean();
    rep.hit_std_error = hit_stat.std_error();
    rep.empirical_mean_delay = delay_stat.mean();
    rep.delay_std_error = delay_stat.std_error();
    rep.mean_in_system = queue.mean_in_system();
    rep.effective_miss_rate = queue.observed_span() > 0.0
                                  ? static_cast<double>(queue.customers()) / queue.observed_span()
                                  : 0.0;
    return rep;
}

}  // namespace agiven::sim
