#pragma once

#include <cstdint>

namespace starsylv {

// SplitMix64 (Steele, Lea, Flood; the java.util.SplittableRandom finalizer).
// Every seeded generator in the library draws from this exact sequence, so
// instances are reproducible across platforms and implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-enough draw in [0, bound); bound > 0. Plain modulo: the tiny
    // bias is irrelevant for test-instance generation and keeps the sequence
    // trivially reproducible.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    // Inclusive range draw; requires lo <= hi.
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::uint64_t state_;
};

}  // namespace starsylv
