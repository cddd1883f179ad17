#pragma once

#include <cmath>
#include <cstdint>

namespace iba {

/// Counter-based pseudo-random generator.
///
/// Each (seed, stream) pair names an independent substream, so work can be
/// split per trajectory without the schedule affecting the draws. The state
/// is just a counter; output is produced by a splitmix64-style bijection of
/// (seed, stream, counter).
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(mix(seed + 0x9e3779b97f4a7c15ULL) ^ mix(stream + 0xbf58476d1ce4e5b9ULL))) {}

    std::uint64_t next_u64() { return mix(key_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }

    /// Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    std::uint32_t next_below(std::uint32_t n) {
        return static_cast<std::uint32_t>(next_u64() % n);
    }

    /// Standard normal via Box-Muller (one value per call, no caching).
    double next_normal() {
        double u1 = next_double(), u2 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    /// Samples an index from a discrete distribution (values >= 0, sum ~ 1).
    template <typename Container>
    int next_index(const Container& probs) {
        double u = next_double();
        double acc = 0.0;
        int last = 0;
        for (int i = 0; i < static_cast<int>(probs.size()); ++i) {
            acc += probs[i];
            last = i;
            if (u < acc) return i;
        }
        return last; // rounding slack
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace iba
