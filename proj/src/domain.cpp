#include "agiven/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "agiven/errors.hpp"

namespace agiven {

double Popularity::head_mass(int n) const {
    n = std::clamp(n, 0, file_count());
    return std::accumulate(probs.begin(), probs.begin() + n, 0.0);
}

double RouteDistribution::tail_from(int j) const {
    if (j <= 1) return 1.0;
    if (j > max_blocks()) return 0.0;
    return std::accumulate(probs.begin() + (j - 1), probs.end(), 0.0);
}

RouteDistribution make_geometric_route(const GeometricRoute& route) {
    double psi = route.continue_prob;
    if (!(psi > 0.0 && psi < 1.0))
        throw ConfigError("continue_prob: must be in (0,1)");
    // Smallest J_max with tail mass psi^J_max < tolerance, then renormalize.
    int j_max = static_cast<int>(std::ceil(std::log(kRouteTailTolerance) / std::log(psi)));
    j_max = std::max(j_max, 1);
    std::vector<double> g(j_max);
    double p = 1.0 - psi;
    for (int j = 0; j < j_max; ++j) {
        g[j] = p;
        p *= psi;
    }
    return make_explicit_route(std::move(g));
}

RouteDistribution make_explicit_route(std::vector<double> probs) {
    if (probs.empty()) throw ConfigError("route_probs: must not be empty");
    double sum = 0.0;
    for (double v : probs) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw ConfigError("route_probs: probabilities must be non-negative and finite");
        sum += v;
    }
    if (std::fabs(sum - 1.0) > 1e-9 || sum <= 0.0)
        throw ConfigError("route_probs: probabilities must sum to 1");
    for (double& v : probs) v /= sum;
    return RouteDistribution{std::move(probs)};
}

void validate(const Popularity& p) {
    if (p.probs.empty()) throw ConfigError("popularity: must contain at least one file");
    double sum = 0.0;
    for (size_t i = 0; i < p.probs.size(); ++i) {
        double v = p.probs[i];
        if (!(v >= 0.0) || !std::isfinite(v))
            throw ConfigError("popularity: probabilities must be non-negative and finite");
        if (i > 0 && v > p.probs[i - 1] + 1e-15)
            throw ConfigError("popularity: probabilities must be non-increasing in rank");
        sum += v;
    }
    if (std::fabs(sum - 1.0) > 1e-12)
        throw ConfigError("popularity: probabilities must sum to 1");
}

void validate(const MobilityProfile& m) {
    if (!(m.vehicle_arrival_rate > 0.0))
        throw ConfigError("vehicle_arrival_rate: must be positive");
    if (m.erlang_shape < 1) throw ConfigError("erlang_shape: must be >= 1");
    if (!(m.erlang_rate > 0.0)) throw ConfigError("erlang_rate: must be positive");
    if (m.route_dist.probs.empty()) throw ConfigError("route_dist: missing");
    double sum = std::accumulate(m.route_dist.probs.begin(), m.route_dist.probs.end(), 0.0);
    if (std::fabs(sum - 1.0) > 1e-9)
        throw ConfigError("route_dist: probabilities must sum to 1");
}

void validate(const ManaConfig& c) {
    if (!(c.map_size > 0.0)) throw ConfigError("map_size: must be positive");
    if (c.cache_slots < 0) throw ConfigError("cache_slots: must be non-negative");
    if (!(c.hap_rate >= 0.0)) throw ConfigError("hap_rate: must be non-negative");
    if (!(c.rsu_rate >= 0.0)) throw ConfigError("rsu_rate: must be non-negative");
    if (!(c.delay_target > 0.0)) throw ConfigError("delay_target: must be positive");
}

void validate(const FociConfig& c) {
    if (!(c.file_size > 0.0)) throw ConfigError("file_size: must be positive");
    if (c.cache_slots < 0) throw ConfigError("cache_slots: must be non-negative");
    if (!(c.hap_rate >= 0.0)) throw ConfigError("hap_rate: must be non-negative");
    if (!(c.rsu_rate >= 0.0)) throw ConfigError("rsu_rate: must be non-negative");
    if (!(c.expire_rate > 0.0)) throw ConfigError("expire_rate: must be positive");
    if (!(c.request_rate >= 0.0)) throw ConfigError("request_rate: must be non-negative");
    if (!(c.delay_target > 0.0)) throw ConfigError("delay_target: must be positive");
    validate(c.popularity);
    if (c.cache_slots > c.popularity.file_count())
        throw ConfigError("cache_slots: cannot exceed the number of distinct files");
}

void validate(const ResourceBudget& b) {
    if (!(b.rsu_total > 0.0)) throw ConfigError("rsu_total: must be positive");
    if (!(b.hap_total > 0.0)) throw ConfigError("hap_total: must be positive");
    if (!(b.vehicle_cache > 0.0)) throw ConfigError("vehicle_cache: must be positive");
    if (b.block_count < 1) throw ConfigError("block_count: must be positive");
}

}  // namespace agiven
