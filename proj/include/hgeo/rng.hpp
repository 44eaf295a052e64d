#pragma once

#include <cstdint>

namespace hgeo {

/// Counter-based SplitMix64 generator. Every draw is a pure function of
/// (seed, counter), so substreams can be split off without sharing state and
/// runs are reproducible across platforms for a given CLI seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), counter_(0) {}

    std::uint64_t next_u64() { return mix(seed_ + golden_ * ++counter_); }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Independent substream identified by a key; draws never collide with
    /// the parent stream because the key is folded through the mixer.
    Rng split(std::uint64_t key) const { return Rng(mix(seed_ ^ mix(key + golden_))); }

private:
    static constexpr std::uint64_t golden_ = 0x9E3779B97F4A7C15ull;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t counter_;
};

} // namespace hgeo
