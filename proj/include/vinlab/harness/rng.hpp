#pragma once

#include <cstdint>

namespace vinlab::harness {

/// Counter-based SplitMix64 generator.  Streams are derived by hashing
/// (seed, stream) so that per-trial / per-batch substreams are independent of
/// thread scheduling, which keeps every experiment bit-reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Substream generator: deterministic function of (seed, stream id).
    Rng stream(std::uint64_t id) const { return Rng(mix(state_ ^ mix(id))); }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [-1, 1).
    double next_symmetric() { return 2.0 * next_double() - 1.0; }

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        // Desk-scale n: modulo bias is negligible and determinism is what matters.
        return next_u64() % n;
    }

private:
    std::uint64_t state_;
};

}  // namespace vinlab::harness
