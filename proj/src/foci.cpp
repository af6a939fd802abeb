#include "agiven/foci.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "agiven/errors.hpp"

namespace agiven::foci {

namespace {

constexpr double kRhoUnitTolerance = 1e-9;

// (1 - rho^m) / (1 - rho^M) via expm1 so the ratio stays accurate near rho = 1;
// rewritten in powers of 1/rho above 1 so large exponents cannot overflow.
double geometric_ratio(double rho, double m, double big_m) {
    double lr = std::log(rho);
    if (rho < 1.0) return std::expm1(m * lr) / std::expm1(big_m * lr);
    double a = std::exp(-(big_m - m) * lr);  // rho^{m-M}
    double b = std::exp(-big_m * lr);        // rho^{-M}
    return (a - b) / (1.0 - b);
}

double rho_of(const FociConfig& cfg) {
    if (cfg.hap_rate <= 0.0) return std::numeric_limits<double>::infinity();
    return cfg.expire_rate * cfg.file_size / cfg.hap_rate;
}

}  // namespace

Popularity zipf(int file_count, double skewness) {
    if (file_count < 1) throw ConfigError("file_count: must be >= 1");
    if (!(skewness >= 0.0)) throw ConfigError("zipf_skew: must be non-negative");
    std::vector<double> p(file_count);
    double sum = 0.0;
    for (int f = 1; f <= file_count; ++f) {
        p[f - 1] = std::pow(static_cast<double>(f), -skewness);
        sum += p[f - 1];
    }
    for (double& v : p) v /= sum;
    return Popularity{std::move(p)};
}

std::vector<double> cache_steady_state(double rho, int slots) {
    if (!(rho > 0.0)) throw ConfigError("rho: must be positive");
    if (slots < 0) throw ConfigError("cache_slots: must be non-negative");
    std::vector<double> r(slots + 1);
    if (std::fabs(rho - 1.0) < kRhoUnitTolerance) {
        std::fill(r.begin(), r.end(), 1.0 / (slots + 1));
        return r;
    }
    // r_i = (1-rho) rho^{C_p - i} / (1 - rho^{C_p+1}); for rho > 1 the same
    // law rewritten in powers of 1/rho to avoid overflow.
    if (rho < 1.0) {
        double norm = (1.0 - rho) / -std::expm1((slots + 1) * std::log(rho));
        double pw = 1.0;
        for (int i = slots; i >= 0; --i) {
            r[i] = norm * pw;
            pw *= rho;
        }
    } else {
        double inv = 1.0 / rho;
        double norm = (1.0 - inv) / -std::expm1((slots + 1) * std::log(inv));
        double pw = 1.0;
        for (int i = 0; i <= slots; ++i) {
            r[i] = norm * pw;
            pw *= inv;
        }
    }
    return r;
}

CacheChain make_cache_chain(const FociConfig& cfg) {
    CacheChain chain;
    chain.rho = rho_of(cfg);
    chain.slots = cfg.cache_slots;
    if (std::isinf(chain.rho)) {
        chain.steady_state.assign(cfg.cache_slots + 1, 0.0);
        chain.steady_state[0] = 1.0;  // no updates: cache drains empty
    } else {
        chain.steady_state = cache_steady_state(chain.rho, cfg.cache_slots);
    }
    return chain;
}

double hit_ratio(const Popularity& pop, double rho, int slots) {
    if (slots > pop.file_count())
        throw ConfigError("cache_slots: cannot exceed the number of distinct files");
    if (slots == 0) return 0.0;
    if (std::isinf(rho)) return 0.0;
    if (!(rho > 0.0)) throw ConfigError("rho: must be positive");
    double acc = 0.0;
    if (std::fabs(rho - 1.0) < kRhoUnitTolerance) {
        for (int f = 1; f <= slots; ++f)
            acc += pop.probs[f - 1] * (slots - f + 1.0) / (slots + 1.0);
    } else {
        for (int f = 1; f <= slots; ++f)
            acc += pop.probs[f - 1] * geometric_ratio(rho, slots - f + 1.0, slots + 1.0);
    }
    return acc;
}

double hit_ratio_direct(const Popularity& pop, double rho, int slots) {
    if (slots > pop.file_count())
        throw ConfigError("cache_slots: cannot exceed the number of distinct files");
    if (slots == 0) return 0.0;
    std::vector<double> r = cache_steady_state(rho, slots);
    double acc = 0.0;
    double head = 0.0;
    for (int i = 1; i <= slots; ++i) {
        head += pop.probs[i - 1];
        acc += r[i] * head;
    }
    return acc;
}

double cache_utilization(double rho, int slots) {
    if (slots == 0) return 0.0;
    if (std::isinf(rho)) return 0.0;
    std::vector<double> r = cache_steady_state(rho, slots);
    double mean = 0.0;
    for (int i = 1; i <= slots; ++i) mean += i * r[i];
    return mean / slots;
}

double foci_delay(double thinned_arrival, double file_size, double rsu_rate) {
    if (!(rsu_rate > 0.0)) throw ConfigError("rsu_rate: RSU rate required");
    double h = file_size / rsu_rate;
    double load = thinned_arrival * h;
    if (load >= 1.0)
        throw InstabilityError("foci RSU queue unstable: load >= 1", load);
    return h + load * h / (2.0 * (1.0 - load));
}

double min_rsu_rate_foci(double p_hit, double request_rate, double delay_target,
                         double file_size) {
    if (!(delay_target > 0.0)) throw ConfigError("delay_target: must be positive");
    double z = request_rate * (1.0 - p_hit) * delay_target;
    return (file_size / delay_target) / (1.0 - z / (1.0 + std::sqrt(1.0 + z * z)));
}

FociAnalysis analyze(const FociConfig& cfg) {
    FociAnalysis a;
    double rho = rho_of(cfg);
    a.hit_ratio = (cfg.cache_slots == 0 || std::isinf(rho))
                      ? 0.0
                      : hit_ratio(cfg.popularity, rho, cfg.cache_slots);
    a.thinned_arrival = cfg.request_rate * (1.0 - a.hit_ratio);
    a.cache_utilization = cache_utilization(rho, cfg.cache_slots);
    // A slice with no requests has no RSU queue to speak of.
    a.mean_delay = (cfg.request_rate == 0.0 && cfg.rsu_rate <= 0.0)
                       ? 0.0
                       : foci_delay(a.thinned_arrival, cfg.file_size, cfg.rsu_rate);
    return a;
}

}  // namespace agiven::foci
