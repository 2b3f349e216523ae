#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace ofdmim {

// SplitMix64 (Steele, Lea, Flood 2014). Used only to expand seeds.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// xoshiro256++ (Blackman, Vigna 2019), state expanded from a 64-bit seed via
// SplitMix64. Gaussians come from the Box-Muller transform with exactly two
// uniforms per pair, so stream consumption is deterministic.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& word : state_) word = sm.next();
    }

    std::uint64_t next_u64() {
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

    // Uniform double in [0, 1), 53 random bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Pair of independent standard normal draws.
    std::pair<double, double> next_gaussian_pair() {
        double u1 = next_unit();
        if (u1 == 0.0) u1 = 0x1.0p-53;
        const double u2 = next_unit();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_;
};

// Independent substream for one trial. Serial and parallel runs that derive
// per-trial generators this way consume identical randomness per trial.
inline Xoshiro256pp trial_substream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 sm(seed);
    const std::uint64_t base = sm.next();
    return Xoshiro256pp(base ^ (index + 1) * 0x9E3779B97F4A7C15ULL);
}

}  // namespace ofdmim
