#pragma once

#include <cstdint>

namespace lcmsep {

/// SplitMix64. Single 64-bit seed, identical streams on every platform;
/// all harness randomness flows through this.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n) by rejection; n > 0.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = ~0ULL - ~0ULL % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return uniform01() < p; }

    /// Child generator with a decorrelated seed (for per-task streams).
    Prng split(std::uint64_t tag) {
        Prng tmp(state_ ^ (0x632be59bd9b4e019ULL + tag));
        return Prng(tmp.next());
    }

private:
    std::uint64_t state_;
};

}  // namespace lcmsep
