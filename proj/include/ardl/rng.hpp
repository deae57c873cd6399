#pragma once

#include <cstdint>

#include "ardl/dist.hpp"

namespace ardl {

/// Identity string recorded in simulation outputs so results can be
/// reproduced bit-for-bit in other implementations.
inline constexpr const char* kRngAlgorithm =
    "xoshiro256++ seeded by splitmix64; normals by inverse CDF";

/// SplitMix64 finalizer (Steele, Lea & Flood 2014). Used both to expand a
/// seed into xoshiro state and as the replication seed-derivation function.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed for replication `index` under base seed `base`: one splitmix64 step
/// at state base + (index + 1) * golden-gamma. Replication i's stream depends
/// only on (base, i), never on the total replication count or thread layout.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t state = base + (index + 1) * 0x9E3779B97F4A7C15ULL;
    return splitmix64(state);
}

/// xoshiro256++ (Blackman & Vigna 2019).
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform on the open interval (0, 1): 53-bit mantissa, offset by half
    /// a ulp so 0 and 1 are unreachable.
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal by inverse CDF (chosen over ziggurat for
    /// cross-implementation bit comparability).
    double next_normal() { return dist::normal_quantile(next_uniform()); }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

}  // namespace ardl
