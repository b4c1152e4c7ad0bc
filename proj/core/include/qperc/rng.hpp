#pragma once

#include <cstdint>

namespace qperc {

// Small splitmix64 generator used throughout the library.
//
// Streams are cheap to construct, so samplers key a fresh stream per
// (seed, replica, item) tuple instead of sharing one generator. Results are
// then independent of evaluation order and of any worker partitioning.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(mix(seed ^ 0x9e3779b97f4a7c15ull)) {}

    // Stream keyed by up to three coordinates (seed, a, b).
    static RngStream keyed(std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0) {
        RngStream r(0);
        r.state_ = mix(mix(mix(seed) ^ a) ^ b);
        return r;
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n), n >= 1. Rejects the biased low region so the
    // draw is exactly uniform.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t min = (0 - n) % n;  // (2^64 - n) mod n
        for (;;) {
            std::uint64_t x = next_u64();
            if (x >= min) return x % n;
        }
    }

    bool bernoulli(double p) { return next_double() < p; }

    double uniform(double a, double b) { return a + (b - a) * next_double(); }

private:
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    std::uint64_t state_;
};

}  // namespace qperc
