#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

// Small self-contained RNG kit. Everything here is fixed by this library (no
// use of std::normal_distribution, whose output is implementation-defined) so
// that a given seed reproduces bit-identical streams across builds of this
// implementation.

namespace schatten::rng {

/// SplitMix64 step. Bijective on 64-bit state; used both as a stream in its
/// own right and as the mixer that derives child seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Mixes a key into a seed, returning a new seed. Chaining mix() calls over a
/// tuple of keys implements the split construction used for substreams.
inline std::uint64_t mix(std::uint64_t seed, std::uint64_t key) {
    std::uint64_t s = seed + 0x9E3779B97F4A7C15ull * (key + 0x632BE59BD9B4E019ull);
    return splitmix64(s);
}

/// xoshiro256++ with SplitMix64 state expansion.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed) {
        for (auto& word : state_) word = splitmix64(seed);
        // All-zero state is the one forbidden fixed point.
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[3] = 1;
    }

    std::uint64_t next() {
        auto rotl = [](std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
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

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1]; safe as a log() argument.
    double uniform01_open_low() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

    /// Standard normal via the Box-Muller transform (both branches consumed in
    /// a fixed order). The transform is pinned here deliberately: it is part
    /// of the reproducibility contract.
    void normal_pair(double& z0, double& z1) {
        const double u1 = uniform01_open_low();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        z0 = r * std::cos(theta);
        z1 = r * std::sin(theta);
    }

    /// +1.0 or -1.0 with equal probability (top bit of the next word).
    double rademacher() { return (next() >> 63) ? 1.0 : -1.0; }

private:
    std::uint64_t state_[4];
};

}  // namespace schatten::rng
