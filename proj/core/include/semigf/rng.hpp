#pragma once

#include <cstdint>

namespace semigf {

// SplitMix64 (Vigna). Used both as a seed mixer and as the counter-based
// per-trial stream for the Monte Carlo engine: trial i draws its uniforms
// from splitmix64 evaluated at mix(seed, i) + k, so results do not depend
// on how trials are chunked across threads.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed + stream * 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = splitmix64(s);
    return z ^ splitmix64(s);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double to_unit_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// xoshiro256++ (Blackman & Vigna), seeded through SplitMix64. Used where a
// long sequential stream is wanted (sampling oracles, KS validation).
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& word : state_) word = splitmix64(s);
    }

    std::uint64_t operator()() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    double uniform() { return to_unit_double((*this)()); }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

// Per-trial counter stream: up to 2^64 independent draws per trial index.
class CounterStream {
public:
    CounterStream(std::uint64_t seed, std::uint64_t trial) : state_(mix_seed(seed, trial)) {}
    double uniform() { return to_unit_double(splitmix64(state_)); }

private:
    std::uint64_t state_;
};

} // namespace semigf
