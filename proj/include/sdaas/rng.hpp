#pragma once

#include <cstdint>

namespace sdaas {

// SplitMix64. Small, fast, and bit-stable across platforms, which the
// determinism contracts require; std::uniform_real_distribution is
// implementation-defined and cannot be used for reproducible outputs.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double next_double(double lo, double hi) {
        return lo + next_unit() * (hi - lo);
    }

    // Uniform index in [0, n).
    std::uint64_t next_index(std::uint64_t n) {
        std::uint64_t i = static_cast<std::uint64_t>(next_unit() * static_cast<double>(n));
        return i < n ? i : n - 1;
    }

private:
    std::uint64_t state_;
};

// Stream keyed by (seed, key): draws depend only on the pair, not on how many
// other streams were consumed before.
inline SplitMix64 keyed_stream(std::uint64_t seed, std::uint64_t key) {
    SplitMix64 mixer(seed ^ (key * 0xD6E8FEB86659FD93ULL + 0xA5A5A5A5A5A5A5A5ULL));
    return SplitMix64(mixer.next());
}

} // namespace sdaas
