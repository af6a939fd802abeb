#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace agiven::sim {

inline uint64_t splitmix64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic random stream addressed by (seed, stream_id). Identical inputs
// give identical draw sequences on every platform: the mt19937_64 engine is
// fully specified by the standard, and the uniform/exponential recipes below
// avoid std::*_distribution (whose sequences are implementation-defined).
class RandomStream {
public:
    RandomStream(uint64_t seed, uint64_t stream_id) {
        uint64_t s = seed ^ (0xda3e39cb94b95bdbULL * (stream_id + 1));
        engine_.seed(splitmix64(s));
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Exponential with the given rate; uses -log(1-U) so the argument stays in (0,1].
    double exponential(double rate) { return -std::log1p(-uniform()) / rate; }

    uint64_t bits() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace agiven::sim
